#pragma once

#include <map>
#include <string>

#include "profilekit/bigint.hpp"
#include "profilekit/graph.hpp"
#include "profilekit/guarding.hpp"

namespace profilekit {

// Graph classes with an explicit profile-complexity bound, plus the
// colouring-number calculators that feed the ordering-based constructions.
enum class BoundClass {
    KtMinor,      // params t, r, k
    Treewidth,    // params t, r, k
    Minor,        // params h (>= 4), r, k
    Outerplanar,  // params r, k
    Interval,     // params r, k
    Chordal,      // params r, k
    Treelength,   // params ell, r, k
    Subdivision,  // params s, r, k
    Balls,        // params d, t, r, k
    GeneralDiam,  // params r, k
    ScolMinor,    // params h, r
    WcolMinor,    // params h, r
    WcolSubdivision, // params s, r
};

struct BoundQuery {
    BoundClass cls = BoundClass::GeneralDiam;
    std::map<std::string, long long> params;

    long long param(const std::string & name) const;
};

BoundClass bound_class_from_name(const std::string & name);
std::string bound_class_name(BoundClass cls);

// Exact integer value of the class formula.
BigInt bound_value(const BoundQuery & query);

// Convenience wrappers used by the experiment suites; all exact.
BigInt treewidth_bound(long long t, long long r, long long k);
BigInt outerplanar_bound(long long r, long long k);
BigInt interval_bound(long long r, long long k);
BigInt chordal_bound(long long r, long long k);
BigInt treelength_bound(long long ell, long long r, long long k);

struct GuardingInequalityReport {
    bool guarding_ok = false;
    long long pc_measured = 0;
    BigInt rhs;
    bool ok = false;
};

enum class InnerBound { Universal, KtMinor };

// Checks measured pc against f(r,p) * |family| where f is the trivial
// (r+2)^p profile cap or the clique-minor-free bound with parameter t.
GuardingInequalityReport guarding_inequality_check(const Graph & g, const TargetSet & a_set, int radius,
                                                   const GuardingFamily & family, InnerBound inner,
                                                   long long t = 0);

} // namespace profilekit
