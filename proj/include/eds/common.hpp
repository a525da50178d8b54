#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eds {

using Vertex = int;
// Vertex sets are kept sorted ascending everywhere; outputs are deterministic.
using VertexSet = std::vector<Vertex>;

enum class ErrorCode {
    OutOfRange,
    SelfLoop,
    NotBipartite,
    PatternTooLarge,
    Disconnected,
    EccentricityBoundViolated,
    BudgetExceeded,
    RejectionExhausted,
    InvalidSolution,
    ParseError,
    UnknownClassName,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    Error(ErrorCode code, const std::string& msg, VertexSet witness)
        : std::runtime_error(msg), code_(code), witness_(std::move(witness)) {}

    ErrorCode code() const { return code_; }
    // Witness payload, e.g. the odd cycle for NotBipartite.
    const VertexSet& witness() const { return witness_; }

private:
    ErrorCode code_;
    VertexSet witness_;
};

// Exact vertex weight carried through I/O. Stored reduced, den > 0.
struct Rational {
    long long num = 1;
    long long den = 1;

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_one() const { return num == 1 && den == 1; }
};

inline void insert_sorted(VertexSet& s, Vertex v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

inline bool contains_sorted(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

} // namespace eds
