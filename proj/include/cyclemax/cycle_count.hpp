#pragma once

#include "cyclemax/bigcount.hpp"
#include "cyclemax/graph.hpp"

#include <map>

namespace cyclemax {

// Every simple cycle counted once. Runtime grows with the answer, so this is
// practical up to roughly 1e8 cycles. Parallel over root vertices.
BigCount count_cycles(const Graph& g);
std::map<int, BigCount> count_cycles_by_length(const Graph& g);

// Single-threaded version of the same enumeration.
BigCount count_cycles_serial(const Graph& g);

BigCount turan_cycle_count(int n);
BigCount complete_bipartite_cycle_count(int a, int b);
BigCount complete_graph_cycle_count(int n);

}
