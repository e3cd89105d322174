#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk {

enum class EnumStrategy { Naive, Structured };

/// Every isomorphism class of connected graphs with n vertices and n+2 edges,
/// exactly once, by filtering all edge subsets of size n+2. Brute-force
/// oracle; guarded to n <= 8. Emission order is deterministic.
void enumerate_tricyclic_naive(int n, const std::function<void(const Graph&)>& emit,
                               int threads = 1);

/// Same classes, generated structurally: sweep the eight base topologies over
/// all segment lengths fitting n vertices, then attach rooted trees to base
/// vertices. Guarded to n <= 12. Emission order is deterministic.
void enumerate_tricyclic_structured(int n, const std::function<void(const Graph&)>& emit,
                                    int threads = 1);

std::vector<Graph> enumerate_tricyclic(int n, EnumStrategy strategy, int threads = 1);

/// Census of one order. counterexamples and equivalence_failures are empty
/// on a correct implementation.
struct EnumerationReport {
    int order = 0;
    std::int64_t total = 0;       // connected tricyclic isomorphism classes
    std::int64_t positives = 0;   // exactly two main eigenvalues
    std::int64_t classified = 0;  // matched a catalog member
    std::vector<std::string> counterexamples;        // graph6: positive XOR classified
    std::vector<std::string> equivalence_failures;   // graph6: count/linearity mismatch
    std::vector<std::string> positives_g6;           // filled when requested
};

/// Analyzes every connected tricyclic graph of each order up to n_max:
/// exact main-eigenvalue count, linearity verdict, the count/linearity
/// cross-check, and catalog classification. A graph lands in counterexamples
/// iff (count == 2) xor (classified). Counterexamples are data, not errors.
std::vector<EnumerationReport> verify_catalog(int n_max, EnumStrategy strategy,
                                              int threads = 1,
                                              bool record_positives = false);

std::string report_table(const std::vector<EnumerationReport>& reports);
std::string report_json(const std::vector<EnumerationReport>& reports,
                        EnumStrategy strategy);

}  // namespace twowalk
