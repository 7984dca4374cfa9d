#include "profilekit/bounds.hpp"

#include <cmath>

#include "profilekit/profiles.hpp"
#include "profilekit/verify.hpp"

namespace profilekit {

long long BoundQuery::param(const std::string & name) const
{
    auto it = params.find(name);
    if (it == params.end())
        throw InputError("bound query is missing parameter '" + name + "'");
    return it->second;
}

BoundClass bound_class_from_name(const std::string & name)
{
    if (name == "ktminor")
        return BoundClass::KtMinor;
    if (name == "treewidth")
        return BoundClass::Treewidth;
    if (name == "minor")
        return BoundClass::Minor;
    if (name == "outerplanar")
        return BoundClass::Outerplanar;
    if (name == "interval")
        return BoundClass::Interval;
    if (name == "chordal")
        return BoundClass::Chordal;
    if (name == "treelength")
        return BoundClass::Treelength;
    if (name == "subdivision")
        return BoundClass::Subdivision;
    if (name == "balls")
        return BoundClass::Balls;
    if (name == "general-diam")
        return BoundClass::GeneralDiam;
    if (name == "scol-minor")
        return BoundClass::ScolMinor;
    if (name == "wcol-minor")
        return BoundClass::WcolMinor;
    if (name == "wcol-subdivision")
        return BoundClass::WcolSubdivision;
    throw InputError("unknown bound class '" + name + "'");
}

std::string bound_class_name(BoundClass cls)
{
    switch (cls) {
    case BoundClass::KtMinor: return "ktminor";
    case BoundClass::Treewidth: return "treewidth";
    case BoundClass::Minor: return "minor";
    case BoundClass::Outerplanar: return "outerplanar";
    case BoundClass::Interval: return "interval";
    case BoundClass::Chordal: return "chordal";
    case BoundClass::Treelength: return "treelength";
    case BoundClass::Subdivision: return "subdivision";
    case BoundClass::Balls: return "balls";
    case BoundClass::GeneralDiam: return "general-diam";
    case BoundClass::ScolMinor: return "scol-minor";
    case BoundClass::WcolMinor: return "wcol-minor";
    case BoundClass::WcolSubdivision: return "wcol-subdivision";
    }
    throw InputError("unknown bound class");
}

namespace {

unsigned long long as_exponent(long long value, const char * name)
{
    if (value < 0)
        throw InputError(std::string("parameter '") + name + "' must be nonnegative");
    return static_cast<unsigned long long>(value);
}

void require_nonnegative(long long value, const char * name)
{
    if (value < 0)
        throw InputError(std::string("parameter '") + name + "' must be nonnegative");
}

void require_at_least(long long value, long long floor, const char * name)
{
    if (value < floor)
        throw InputError(std::string("parameter '") + name + "' must be at least " + std::to_string(floor));
}

} // namespace

BigInt treewidth_bound(long long t, long long r, long long k)
{
    require_at_least(t, 1, "t");
    require_nonnegative(r, "r");
    require_at_least(k, 1, "k");
    return BigInt::pow(2, as_exponent(t + 3, "t")) *
           BigInt::pow(BigInt(static_cast<unsigned long long>(r + 1)), as_exponent(t + 1, "t")) *
           BigInt::pow(BigInt(static_cast<unsigned long long>(t + 1)), as_exponent(t + 1, "t")) *
           BigInt(static_cast<unsigned long long>(k));
}

BigInt outerplanar_bound(long long r, long long k)
{
    require_nonnegative(r, "r");
    require_at_least(k, 1, "k");
    BigInt side(static_cast<unsigned long long>(2 * r + 2));
    return BigInt(1) + side * side * BigInt(static_cast<unsigned long long>(k));
}

BigInt interval_bound(long long r, long long k)
{
    require_nonnegative(r, "r");
    require_at_least(k, 1, "k");
    BigInt kk(static_cast<unsigned long long>(k));
    BigInt rr(static_cast<unsigned long long>(r));
    return BigInt(4) * kk * kk * rr + BigInt(8) * kk * kk + BigInt(2) * kk * rr + BigInt(7) * kk + BigInt(1);
}

BigInt chordal_bound(long long r, long long k)
{
    require_nonnegative(r, "r");
    require_at_least(k, 1, "k");
    // Assembled from the three chordal cases: bag vertices, one-separator
    // components, two-separator components via the interval count.
    BigInt pow2k = BigInt::pow(2, as_exponent(k, "k"));
    BigInt case12 = BigInt(static_cast<unsigned long long>(r + 3)) * pow2k;
    BigInt case3 = BigInt(static_cast<unsigned long long>(r + 1)) * interval_bound(r, k);
    return BigInt(2) * BigInt(static_cast<unsigned long long>(k)) * (case12 + case3);
}

BigInt treelength_bound(long long ell, long long r, long long k)
{
    require_at_least(ell, 1, "ell");
    require_nonnegative(r, "r");
    require_at_least(k, 1, "k");
    BigInt classes = BigInt::pow(BigInt(static_cast<unsigned long long>(ell + 1)), as_exponent(k, "k"));
    BigInt cases = BigInt(1) + BigInt(static_cast<unsigned long long>(r + 2)) +
                   BigInt(static_cast<unsigned long long>(r + 2)) * BigInt(static_cast<unsigned long long>(r + 2));
    return BigInt(2) * BigInt(static_cast<unsigned long long>(k)) * classes * cases;
}

BigInt bound_value(const BoundQuery & query)
{
    switch (query.cls) {
    case BoundClass::KtMinor: {
        long long t = query.param("t"), r = query.param("r"), k = query.param("k");
        require_at_least(t, 3, "t");
        require_nonnegative(r, "r");
        require_at_least(k, 1, "k");
        return BigInt::pow(BigInt(static_cast<unsigned long long>(r + 1)), as_exponent(t - 1, "t")) *
               BigInt::pow(BigInt(static_cast<unsigned long long>(k)), as_exponent(t - 1, "t"));
    }
    case BoundClass::Treewidth:
        return treewidth_bound(query.param("t"), query.param("r"), query.param("k"));
    case BoundClass::Minor: {
        long long h = query.param("h"), r = query.param("r"), k = query.param("k");
        require_at_least(h, 4, "h");
        require_nonnegative(r, "r");
        require_at_least(k, 1, "k");
        return BigInt::pow(4, as_exponent(h, "h")) * BigInt(static_cast<unsigned long long>(h - 3)) *
               BigInt::pow(BigInt(static_cast<unsigned long long>(h)), as_exponent(2 * (h - 1), "h")) *
               BigInt::pow(BigInt(static_cast<unsigned long long>(r + 1)), as_exponent(3 * (h - 1), "h")) *
               BigInt(static_cast<unsigned long long>(k));
    }
    case BoundClass::Outerplanar:
        return outerplanar_bound(query.param("r"), query.param("k"));
    case BoundClass::Interval:
        return interval_bound(query.param("r"), query.param("k"));
    case BoundClass::Chordal:
        return chordal_bound(query.param("r"), query.param("k"));
    case BoundClass::Treelength:
        return treelength_bound(query.param("ell"), query.param("r"), query.param("k"));
    case BoundClass::Subdivision: {
        long long s = query.param("s"), r = query.param("r"), k = query.param("k");
        require_at_least(s, 1, "s");
        require_nonnegative(r, "r");
        require_at_least(k, 1, "k");
        BigInt s4r = BigInt::pow(BigInt(static_cast<unsigned long long>(s)), as_exponent(4 * r, "r"));
        // Exponent of (2r+2); huge already for moderate s and r, so it must
        // still fit an u64 and the result must fit the limb cap.
        BigInt exponent_big = BigInt(2) * s4r +
                              BigInt(4) * BigInt::pow(BigInt(static_cast<unsigned long long>(s)), 4) *
                                  BigInt(static_cast<unsigned long long>(2 * r + 2)) +
                              BigInt(static_cast<unsigned long long>(r));
        if (BigInt(1ull << 62) < exponent_big)
            throw BudgetError("subdivision bound exponent too large to materialize");
        unsigned long long exponent = std::stoull(exponent_big.str());
        return BigInt::pow(4, as_exponent(r, "r")) * s4r *
               BigInt::pow(BigInt(static_cast<unsigned long long>(2 * r + 2)), exponent) *
               BigInt(static_cast<unsigned long long>(k));
    }
    case BoundClass::Balls: {
        long long d = query.param("d"), t = query.param("t"), r = query.param("r"), k = query.param("k");
        require_at_least(d, 1, "d");
        require_at_least(t, 1, "t");
        require_at_least(r, 1, "r");
        require_at_least(k, 1, "k");
        BigInt reach = BigInt::pow(BigInt(static_cast<unsigned long long>(2 * r + 1)), as_exponent(d, "d"));
        BigInt exponent_big = BigInt(static_cast<unsigned long long>(d)) +
                              BigInt(static_cast<unsigned long long>(t)) * reach;
        if (BigInt(1ull << 62) < exponent_big)
            throw BudgetError("balls bound exponent too large to materialize");
        unsigned long long exponent = std::stoull(exponent_big.str());
        unsigned long long log2r = 0;
        while ((1ull << log2r) < static_cast<unsigned long long>(r))
            ++log2r;
        return BigInt::pow(4, as_exponent(d, "d")) *
               BigInt::pow(BigInt(static_cast<unsigned long long>(r + 2)), exponent) *
               BigInt(static_cast<unsigned long long>(t)) * BigInt(log2r) *
               BigInt::binomial(static_cast<unsigned long long>(r + 2 * t + 2),
                                static_cast<unsigned long long>(2 * t + 2)) *
               BigInt(static_cast<unsigned long long>(k));
    }
    case BoundClass::GeneralDiam: {
        long long r = query.param("r"), k = query.param("k");
        require_nonnegative(r, "r");
        require_at_least(k, 1, "k");
        return BigInt::pow(BigInt(static_cast<unsigned long long>(r + 2)), as_exponent(k, "k")) - BigInt(1);
    }
    case BoundClass::ScolMinor: {
        long long h = query.param("h"), r = query.param("r");
        require_at_least(h, 4, "h");
        require_nonnegative(r, "r");
        return BigInt(static_cast<unsigned long long>(h - 3)) *
               BigInt(static_cast<unsigned long long>(h - 1)) *
               BigInt(static_cast<unsigned long long>(2 * r + 1));
    }
    case BoundClass::WcolMinor: {
        long long h = query.param("h"), r = query.param("r");
        require_at_least(h, 4, "h");
        require_nonnegative(r, "r");
        return BigInt::binomial(static_cast<unsigned long long>(r + h - 2),
                                static_cast<unsigned long long>(h - 2)) *
               BigInt(static_cast<unsigned long long>(h - 3)) *
               BigInt(static_cast<unsigned long long>(2 * r + 1));
    }
    case BoundClass::WcolSubdivision: {
        long long s = query.param("s"), r = query.param("r");
        require_at_least(s, 1, "s");
        require_nonnegative(r, "r");
        BigInt base = BigInt(4) * BigInt::pow(BigInt(static_cast<unsigned long long>(s)), 4) *
                      BigInt(static_cast<unsigned long long>(2 * r + 2));
        return BigInt::pow(base, as_exponent(r, "r"));
    }
    }
    throw InputError("unknown bound class");
}

GuardingInequalityReport guarding_inequality_check(const Graph & g, const TargetSet & a_set, int radius,
                                                   const GuardingFamily & family, InnerBound inner,
                                                   long long t)
{
    GuardingInequalityReport report;
    if (a_set.vertices.empty() && family.sets.empty()) {
        // Nothing to guard and nothing to count against.
        report.guarding_ok = true;
        report.ok = true;
        report.rhs = BigInt(0);
        return report;
    }
    auto guard = verify_guarding(g, a_set, radius, family);
    report.guarding_ok = guard.ok;
    report.pc_measured = profile_complexity(g, a_set, radius).count;
    long long p = family.member_cap;
    BigInt f;
    if (inner == InnerBound::Universal) {
        f = BigInt::pow(BigInt(static_cast<unsigned long long>(radius + 2)),
                        static_cast<unsigned long long>(p));
    }
    else {
        require_at_least(t, 3, "t");
        f = BigInt::pow(BigInt(static_cast<unsigned long long>(radius + 1)),
                        static_cast<unsigned long long>(t - 1)) *
            BigInt::pow(BigInt(static_cast<unsigned long long>(p)),
                        static_cast<unsigned long long>(t - 1));
    }
    report.rhs = f * BigInt(static_cast<unsigned long long>(family.sets.size()));
    report.ok = report.guarding_ok &&
                BigInt(static_cast<unsigned long long>(report.pc_measured)) <= report.rhs;
    return report;
}

} // namespace profilekit
