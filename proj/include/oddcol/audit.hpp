#ifndef ODDCOL_AUDIT_HPP
#define ODDCOL_AUDIT_HPP

#include "oddcol/colouring.hpp"
#include "oddcol/graph.hpp"
#include "oddcol/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddcol
{

enum class ViolationKind {
    improper_edge,
    no_odd_colour,
    too_few_odd_colours,
    no_unique_colour,  // pcf: no colour appears exactly once
    empty_edge,        // plain odd colouring of a hypergraph with an empty edge
};

std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    int constraint;      // vertex (neighbourhood semantics) or edge index
    std::string detail;  // offending endpoints or the deficit
};

struct AuditResult {
    bool ok = true;
    std::vector<Violation> violations;

    explicit operator bool() const { return ok; }
};

/// Which colouring notion to check or search for.
struct Variant {
    enum class Kind { proper, odd, pcf, hodd };
    Kind kind = Kind::odd;
    int h = 1;  // only meaningful for hodd

    static Variant proper() { return {Kind::proper, 1}; }
    static Variant odd() { return {Kind::odd, 1}; }
    static Variant pcf() { return {Kind::pcf, 1}; }
    static Variant hodd(int h) { return {Kind::hodd, h}; }

    std::string name() const;
    /// Parses "proper", "odd", "pcf", "hodd" (with h) or "hodd(<h>)".
    static Variant parse(std::string_view text, int h = 1);

    bool operator==(const Variant &) const = default;
};

// All validators require a total colouring and throw std::invalid_argument
// with "colouring not total" otherwise. Violations are listed exhaustively.

AuditResult is_proper(const Graph &g, const Colouring &c);

/// Sorted colours with an odd number of occurrences in x. Throws if a
/// member of x is uncoloured.
std::vector<Colour> odd_colours(const Colouring &c, std::span<const Vertex> x);

/// Proper, and every non-isolated vertex sees an odd colour.
AuditResult is_odd_colouring(const Graph &g, const Colouring &c);

/// Proper, and every non-isolated vertex sees a colour exactly once.
AuditResult is_pcf_colouring(const Graph &g, const Colouring &c);

/// Proper on the graph, and every hyperedge e has at least min{h,|e|} odd
/// colours. Empty edges are vacuous.
AuditResult is_h_odd_colouring(const PairGH &p, const Colouring &c, int h);

/// Proper on the graph, and every hyperedge has an odd colour. An empty
/// edge can never be satisfied and is reported as empty_edge.
AuditResult is_odd_colouring(const PairGH &p, const Colouring &c);

/// Proper on the graph, and every hyperedge has a colour appearing once.
AuditResult is_pcf_colouring(const PairGH &p, const Colouring &c);

/// Dispatch on the variant, with hyperedges as constraints.
AuditResult validate(const PairGH &p, const Colouring &c, Variant v);

/// Per-constraint view of the odd-colour bookkeeping.
struct OddRecord {
    int constraint = 0;
    std::vector<Colour> odd;
    std::optional<Colour> witness;  // present iff exactly one odd colour
    int required = 0;               // min{h, |constraint|}
    bool satisfied = false;
};

/// Incremental parity bookkeeping for a family of vertex sets under a
/// (possibly partial) colouring. Uncoloured members are not counted.
///
/// For every constraint the audit keeps one parity bit per colour, the
/// number of odd colours, and the XOR of the odd colours, so the witness of
/// a critical constraint is available in O(1).
class OddAudit
{
public:
    OddAudit() = default;

    /// Constraints are arbitrary vertex sets over [0, colouring.order()).
    OddAudit(std::vector<std::vector<Vertex>> constraints, Colouring colouring);

    /// Constraint v is N(v); isolated vertices give empty constraints.
    static OddAudit for_graph(const Graph &g, Colouring colouring);

    /// Constraint i is edge i of h.
    static OddAudit for_hypergraph(const Hypergraph &h, Colouring colouring);

    /// Change v from `from` to `to` (either may be 0 = uncoloured). Throws
    /// std::logic_error if v is not currently coloured `from`.
    void recolour(Vertex v, Colour from, Colour to);

    const Colouring &colouring() const { return colouring_; }
    Colour colour(Vertex v) const { return colouring_.colour[v]; }

    int constraint_count() const { return static_cast<int>(members_.size()); }
    std::span<const Vertex> members(int cid) const { return members_[cid]; }
    std::span<const int> containing(Vertex v) const { return containing_[v]; }

    int odd_count(int cid) const { return odd_count_[cid]; }
    int coloured_count(int cid) const { return coloured_[cid]; }
    bool is_odd(int cid, Colour c) const { return parity_[index(cid, c)] != 0; }
    std::optional<Colour> witness(int cid) const;
    std::vector<Colour> odd_colours(int cid) const;

    int required(int cid, int h) const;
    bool satisfied(int cid, int h) const { return odd_count(cid) >= required(cid, h); }
    OddRecord record(int cid, int h) const;

    /// Same colouring and identical parity state.
    bool operator==(const OddAudit &other) const;

private:
    std::size_t index(int cid, Colour c) const
    {
        return static_cast<std::size_t>(cid) * stride_ + static_cast<std::size_t>(c);
    }
    void toggle(int cid, Colour c);

    std::vector<std::vector<Vertex>> members_;
    std::vector<std::vector<int>> containing_;
    Colouring colouring_;
    std::size_t stride_ = 1;
    std::vector<std::uint8_t> parity_;
    std::vector<int> odd_count_;
    std::vector<int> odd_xor_;
    std::vector<int> coloured_;
};

} // namespace oddcol

#endif // ODDCOL_AUDIT_HPP
