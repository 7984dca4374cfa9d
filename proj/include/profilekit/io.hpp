#pragma once

#include <iosfwd>
#include <string>

#include "profilekit/colnum.hpp"
#include "profilekit/graph.hpp"
#include "profilekit/guarding.hpp"
#include "profilekit/interval.hpp"
#include "profilekit/treerep.hpp"

namespace profilekit {

// PACE-style graph format: optional 'c' comment lines, one 'p gr <n> <m>'
// header, then m lines 'u v', 1-indexed.
Graph parse_graph(std::istream & in);
Graph parse_graph_text(const std::string & text);
std::string emit_graph(const Graph & g);

// Decomposition format: 's td <bags> <maxbagsize> <n>' header, bag lines
// 'b <id> <v1> ...', then bag-tree edge lines 'id id'.
TreeRepresentation parse_td(std::istream & in);
TreeRepresentation parse_td_text(const std::string & text);
std::string emit_td(const TreeRepresentation & rep);

// Whitespace-separated permutation of 1..n.
Ordering parse_ordering(std::istream & in, int n);
Ordering parse_ordering_text(const std::string & text, int n);
std::string emit_ordering(const Ordering & ord);

// CSV 'id,c1,...,cd,radius' with exact decimal or fraction literals.
BallSet parse_balls(std::istream & in);
BallSet parse_balls_text(const std::string & text);
std::string emit_balls(const BallSet & bs);

// Intervals are stored as one-dimensional balls.
std::vector<OpenInterval> intervals_from_balls(const BallSet & bs);
BallSet balls_from_intervals(const std::vector<OpenInterval> & intervals);

// Guarding family: 'p <cap> r <radius>' header, then one member per line.
GuardingFamily parse_family(std::istream & in, const Graph & g, const TargetSet & target);
std::string emit_family(const GuardingFamily & family);

std::string read_file(const std::string & path);
void write_file(const std::string & path, const std::string & content);

} // namespace profilekit
