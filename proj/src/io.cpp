#include "profilekit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace profilekit {

namespace {

[[noreturn]] void fail(int line, const std::string & message)
{
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokens_of(const std::string & line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string token;
    while (in >> token)
        out.push_back(token);
    return out;
}

long long to_ll(const std::string & token, int line)
{
    try {
        std::size_t pos = 0;
        long long value = std::stoll(token, &pos);
        if (pos != token.size())
            fail(line, "bad integer '" + token + "'");
        return value;
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const std::exception &) {
        fail(line, "bad integer '" + token + "'");
    }
}

} // namespace

Graph parse_graph(std::istream & in)
{
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (n >= 0)
                fail(line_no, "duplicate header");
            if (tok.size() != 4 || tok[1] != "gr")
                fail(line_no, "expected 'p gr <n> <m>'");
            n = to_ll(tok[2], line_no);
            m = to_ll(tok[3], line_no);
            if (n < 0 || m < 0)
                fail(line_no, "negative counts in header");
            continue;
        }
        if (n < 0)
            fail(line_no, "edge line before header");
        if (tok.size() != 2)
            fail(line_no, "expected 'u v'");
        edges.emplace_back(static_cast<int>(to_ll(tok[0], line_no)),
                           static_cast<int>(to_ll(tok[1], line_no)));
    }
    if (n < 0)
        throw ParseError("missing 'p gr' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, file has " +
                         std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    catch (const InputError & e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph parse_graph_text(const std::string & text)
{
    std::istringstream in(text);
    return parse_graph(in);
}

std::string emit_graph(const Graph & g)
{
    std::ostringstream out;
    out << "p gr " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
    return out.str();
}

TreeRepresentation parse_td(std::istream & in)
{
    std::string line;
    int line_no = 0;
    long long bags = -1, maxbag = -1, n = -1;
    TreeRepresentation rep;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "s") {
            if (bags >= 0)
                fail(line_no, "duplicate header");
            if (tok.size() != 5 || tok[1] != "td")
                fail(line_no, "expected 's td <bags> <maxbagsize> <n>'");
            bags = to_ll(tok[2], line_no);
            maxbag = to_ll(tok[3], line_no);
            n = to_ll(tok[4], line_no);
            if (bags < 1 || maxbag < 0 || n < 0)
                fail(line_no, "bad header counts");
            rep.node_count = static_cast<int>(bags);
            rep.bags.assign(static_cast<std::size_t>(bags) + 1, {});
            seen.assign(static_cast<std::size_t>(bags) + 1, 0);
            continue;
        }
        if (bags < 0)
            fail(line_no, "content before header");
        if (tok[0] == "b") {
            if (tok.size() < 2)
                fail(line_no, "bag line without id");
            long long id = to_ll(tok[1], line_no);
            if (id < 1 || id > bags)
                fail(line_no, "bag id out of range");
            if (seen[static_cast<std::size_t>(id)])
                fail(line_no, "duplicate bag " + std::to_string(id));
            seen[static_cast<std::size_t>(id)] = 1;
            std::vector<int> bag;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                long long v = to_ll(tok[i], line_no);
                if (v < 1 || v > n)
                    fail(line_no, "bag vertex out of range");
                bag.push_back(static_cast<int>(v));
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            if (static_cast<long long>(bag.size()) > maxbag)
                fail(line_no, "bag exceeds announced maximum size");
            rep.bags[static_cast<std::size_t>(id)] = std::move(bag);
            continue;
        }
        if (tok.size() != 2)
            fail(line_no, "expected bag-tree edge 'id id'");
        long long a = to_ll(tok[0], line_no), b = to_ll(tok[1], line_no);
        if (a < 1 || a > bags || b < 1 || b > bags)
            fail(line_no, "tree edge endpoint out of range");
        rep.tree_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (bags < 0)
        throw ParseError("missing 's td' header");
    return rep;
}

TreeRepresentation parse_td_text(const std::string & text)
{
    std::istringstream in(text);
    return parse_td(in);
}

std::string emit_td(const TreeRepresentation & rep)
{
    std::ostringstream out;
    std::size_t maxbag = 0;
    int n = 0;
    for (int t = 1; t <= rep.node_count; ++t) {
        maxbag = std::max(maxbag, rep.bag(t).size());
        for (int v : rep.bag(t))
            n = std::max(n, v);
    }
    out << "s td " << rep.node_count << " " << maxbag << " " << n << "\n";
    for (int t = 1; t <= rep.node_count; ++t) {
        out << "b " << t;
        for (int v : rep.bag(t))
            out << " " << v;
        out << "\n";
    }
    for (auto [a, b] : rep.tree_edges)
        out << a << " " << b << "\n";
    return out.str();
}

Ordering parse_ordering(std::istream & in, int n)
{
    std::vector<int> order;
    long long v;
    while (in >> v)
        order.push_back(static_cast<int>(v));
    try {
        return Ordering::from_sequence(n, order);
    }
    catch (const InputError & e) {
        throw ParseError(std::string("invalid ordering: ") + e.what());
    }
}

Ordering parse_ordering_text(const std::string & text, int n)
{
    std::istringstream in(text);
    return parse_ordering(in, n);
}

std::string emit_ordering(const Ordering & ord)
{
    std::ostringstream out;
    auto seq = ord.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << seq[i] << (i + 1 == seq.size() ? "\n" : " ");
    return out.str();
}

BallSet parse_balls(std::istream & in)
{
    std::string line;
    int line_no = 0;
    int dimension = -1;
    std::vector<Ball> balls;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ','))
            fields.push_back(field);
        if (fields.size() < 3)
            fail(line_no, "expected 'id,c1,...,cd,radius'");
        int d = static_cast<int>(fields.size()) - 2;
        if (dimension == -1)
            dimension = d;
        else if (dimension != d)
            fail(line_no, "inconsistent dimension");
        Ball ball;
        ball.id = static_cast<int>(to_ll(fields[0], line_no));
        try {
            for (int c = 0; c < d; ++c)
                ball.center.push_back(Rational::parse(fields[static_cast<std::size_t>(c) + 1]));
            ball.radius = Rational::parse(fields.back());
        }
        catch (const InputError & e) {
            fail(line_no, e.what());
        }
        balls.push_back(std::move(ball));
    }
    if (dimension == -1)
        throw ParseError("ball file has no entries");
    try {
        return BallSet::of(dimension, std::move(balls));
    }
    catch (const InputError & e) {
        throw ParseError(std::string("invalid ball set: ") + e.what());
    }
}

BallSet parse_balls_text(const std::string & text)
{
    std::istringstream in(text);
    return parse_balls(in);
}

std::string emit_balls(const BallSet & bs)
{
    std::ostringstream out;
    for (const auto & b : bs.balls) {
        out << b.id;
        for (const auto & c : b.center)
            out << "," << c.str();
        out << "," << b.radius.str() << "\n";
    }
    return out.str();
}

std::vector<OpenInterval> intervals_from_balls(const BallSet & bs)
{
    if (bs.dimension != 1)
        throw InputError("interval certificates are one-dimensional ball files");
    std::vector<OpenInterval> out;
    for (const auto & b : bs.balls)
        out.push_back({b.center[0] - b.radius, b.center[0] + b.radius});
    return out;
}

BallSet balls_from_intervals(const std::vector<OpenInterval> & intervals)
{
    std::vector<Ball> balls;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        Ball b;
        b.id = static_cast<int>(i) + 1;
        b.center = {(intervals[i].lo + intervals[i].hi) / Rational(2)};
        b.radius = (intervals[i].hi - intervals[i].lo) / Rational(2);
        balls.push_back(std::move(b));
    }
    return BallSet::of(1, std::move(balls));
}

GuardingFamily parse_family(std::istream & in, const Graph & g, const TargetSet & target)
{
    GuardingFamily family;
    family.target = target;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = tokens_of(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (tok.size() != 4 || tok[2] != "r")
                fail(line_no, "expected 'p <cap> r <radius>'");
            family.member_cap = static_cast<int>(to_ll(tok[1], line_no));
            family.radius = static_cast<int>(to_ll(tok[3], line_no));
            have_header = true;
            continue;
        }
        std::vector<int> member;
        for (const auto & t : tok) {
            int v = static_cast<int>(to_ll(t, line_no));
            if (v < 1 || v > g.vertex_count())
                fail(line_no, "member vertex out of range");
            member.push_back(v);
        }
        std::sort(member.begin(), member.end());
        member.erase(std::unique(member.begin(), member.end()), member.end());
        family.sets.push_back(std::move(member));
    }
    if (!have_header)
        throw ParseError("missing 'p <cap> r <radius>' header");
    return family;
}

std::string emit_family(const GuardingFamily & family)
{
    std::ostringstream out;
    out << "p " << family.member_cap << " r " << family.radius << "\n";
    for (const auto & member : family.sets) {
        for (std::size_t i = 0; i < member.size(); ++i)
            out << member[i] << (i + 1 == member.size() ? "" : " ");
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string & path, const std::string & content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << content;
}

} // namespace profilekit
