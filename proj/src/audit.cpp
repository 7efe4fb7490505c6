#include "oddcol/audit.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcol
{

std::string_view to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::improper_edge: return "improper-edge";
    case ViolationKind::no_odd_colour: return "no-odd-colour";
    case ViolationKind::too_few_odd_colours: return "too-few-odd-colours";
    case ViolationKind::no_unique_colour: return "no-unique-colour";
    case ViolationKind::empty_edge: return "empty-edge";
    }
    return "?";
}

std::string Variant::name() const
{
    switch (kind) {
    case Kind::proper: return "proper";
    case Kind::odd: return "odd";
    case Kind::pcf: return "pcf";
    case Kind::hodd: return "hodd(" + std::to_string(h) + ")";
    }
    return "?";
}

Variant Variant::parse(std::string_view text, int h)
{
    if (text == "proper")
        return proper();
    if (text == "odd")
        return odd();
    if (text == "pcf")
        return pcf();
    if (text == "hodd") {
        if (h < 1)
            throw std::invalid_argument("hodd requires h >= 1");
        return hodd(h);
    }
    if (text.starts_with("hodd(") && text.ends_with(")")) {
        const std::string inner(text.substr(5, text.size() - 6));
        return parse("hodd", std::stoi(inner));
    }
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

namespace
{

void require_total(const Colouring &c)
{
    if (!c.total())
        throw std::invalid_argument("colouring not total");
    c.check_range();
}

void require_order(const Colouring &c, int n)
{
    if (c.order() != n)
        throw std::invalid_argument("colouring size does not match graph");
}

/// Colour multiplicities of a vertex set, with O(|x|) reset.
class Tally
{
public:
    explicit Tally(int k) : count_(k + 1, 0) {}

    void load(const Colouring &c, std::span<const Vertex> x)
    {
        for (Colour col : touched_)
            count_[col] = 0;
        touched_.clear();
        for (Vertex v : x) {
            const Colour col = c.colour[v];
            if (count_[col]++ == 0)
                touched_.push_back(col);
        }
    }
    int odd() const
    {
        return static_cast<int>(
            std::count_if(touched_.begin(), touched_.end(), [&](Colour c) { return count_[c] % 2 == 1; }));
    }
    int unique() const
    {
        return static_cast<int>(
            std::count_if(touched_.begin(), touched_.end(), [&](Colour c) { return count_[c] == 1; }));
    }

private:
    std::vector<int> count_;
    std::vector<Colour> touched_;
};

void collect_improper(const Graph &g, const Colouring &c, AuditResult &out)
{
    for (auto [u, v] : g.edges())
        if (c.colour[u] == c.colour[v]) {
            out.ok = false;
            out.violations.push_back({ViolationKind::improper_edge, u,
                                      std::to_string(u) + "-" + std::to_string(v)});
        }
}

std::string deficit(int have, int need)
{
    return "odd=" + std::to_string(have) + " required=" + std::to_string(need);
}

} // namespace

AuditResult is_proper(const Graph &g, const Colouring &c)
{
    require_order(c, g.order());
    require_total(c);
    AuditResult out;
    collect_improper(g, c, out);
    return out;
}

std::vector<Colour> odd_colours(const Colouring &c, std::span<const Vertex> x)
{
    std::vector<Colour> cols;
    cols.reserve(x.size());
    for (Vertex v : x) {
        if (v < 0 || v >= c.order() || c.colour[v] == unassigned)
            throw std::invalid_argument("odd_colours: member uncoloured");
        cols.push_back(c.colour[v]);
    }
    std::sort(cols.begin(), cols.end());
    std::vector<Colour> odd;
    for (std::size_t i = 0; i < cols.size();) {
        std::size_t j = i;
        while (j < cols.size() && cols[j] == cols[i])
            ++j;
        if ((j - i) % 2 == 1)
            odd.push_back(cols[i]);
        i = j;
    }
    return odd;
}

AuditResult is_odd_colouring(const Graph &g, const Colouring &c)
{
    AuditResult out = is_proper(g, c);
    Tally tally(c.k);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            continue;
        tally.load(c, g.neighbours(v));
        if (tally.odd() == 0) {
            out.ok = false;
            out.violations.push_back({ViolationKind::no_odd_colour, v, deficit(0, 1)});
        }
    }
    return out;
}

AuditResult is_pcf_colouring(const Graph &g, const Colouring &c)
{
    AuditResult out = is_proper(g, c);
    Tally tally(c.k);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            continue;
        tally.load(c, g.neighbours(v));
        if (tally.unique() == 0) {
            out.ok = false;
            out.violations.push_back({ViolationKind::no_unique_colour, v, "unique=0"});
        }
    }
    return out;
}

AuditResult is_h_odd_colouring(const PairGH &p, const Colouring &c, int h)
{
    if (h < 1)
        throw std::invalid_argument("h must be at least 1");
    AuditResult out = is_proper(p.graph, c);
    Tally tally(c.k);
    for (std::size_t i = 0; i < p.hyper.size(); ++i) {
        auto e = p.hyper.edge(i);
        const int need = std::min<int>(h, static_cast<int>(e.size()));
        if (need == 0)
            continue;
        tally.load(c, e);
        const int have = tally.odd();
        if (have < need) {
            out.ok = false;
            out.violations.push_back({have == 0 ? ViolationKind::no_odd_colour
                                                : ViolationKind::too_few_odd_colours,
                                      static_cast<int>(i), deficit(have, need)});
        }
    }
    return out;
}

AuditResult is_odd_colouring(const PairGH &p, const Colouring &c)
{
    AuditResult out = is_proper(p.graph, c);
    Tally tally(c.k);
    for (std::size_t i = 0; i < p.hyper.size(); ++i) {
        auto e = p.hyper.edge(i);
        if (e.empty()) {
            out.ok = false;
            out.violations.push_back({ViolationKind::empty_edge, static_cast<int>(i), "empty"});
            continue;
        }
        tally.load(c, e);
        if (tally.odd() == 0) {
            out.ok = false;
            out.violations.push_back({ViolationKind::no_odd_colour, static_cast<int>(i), deficit(0, 1)});
        }
    }
    return out;
}

AuditResult is_pcf_colouring(const PairGH &p, const Colouring &c)
{
    AuditResult out = is_proper(p.graph, c);
    Tally tally(c.k);
    for (std::size_t i = 0; i < p.hyper.size(); ++i) {
        auto e = p.hyper.edge(i);
        if (e.empty()) {
            out.ok = false;
            out.violations.push_back({ViolationKind::empty_edge, static_cast<int>(i), "empty"});
            continue;
        }
        tally.load(c, e);
        if (tally.unique() == 0) {
            out.ok = false;
            out.violations.push_back({ViolationKind::no_unique_colour, static_cast<int>(i), "unique=0"});
        }
    }
    return out;
}

AuditResult validate(const PairGH &p, const Colouring &c, Variant v)
{
    switch (v.kind) {
    case Variant::Kind::proper: return is_proper(p.graph, c);
    case Variant::Kind::odd: return is_odd_colouring(p, c);
    case Variant::Kind::pcf: return is_pcf_colouring(p, c);
    case Variant::Kind::hodd: return is_h_odd_colouring(p, c, v.h);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------

OddAudit::OddAudit(std::vector<std::vector<Vertex>> constraints, Colouring colouring)
    : members_(std::move(constraints))
    , containing_(colouring.order())
    , colouring_(std::move(colouring))
{
    colouring_.check_range();
    const int n = colouring_.order();
    stride_ = static_cast<std::size_t>(colouring_.k) + 1;
    const std::size_t count = members_.size();
    parity_.assign(count * stride_, 0);
    odd_count_.assign(count, 0);
    odd_xor_.assign(count, 0);
    coloured_.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (Vertex v : members_[i]) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("constraint member outside universe");
            containing_[v].push_back(static_cast<int>(i));
            const Colour c = colouring_.colour[v];
            if (c != unassigned) {
                toggle(static_cast<int>(i), c);
                ++coloured_[i];
            }
        }
}

OddAudit OddAudit::for_graph(const Graph &g, Colouring colouring)
{
    if (colouring.order() != g.order())
        throw std::invalid_argument("colouring size does not match graph");
    std::vector<std::vector<Vertex>> sets(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbours(v);
        sets[v].assign(nb.begin(), nb.end());
    }
    return OddAudit(std::move(sets), std::move(colouring));
}

OddAudit OddAudit::for_hypergraph(const Hypergraph &h, Colouring colouring)
{
    if (colouring.order() != h.order())
        throw std::invalid_argument("colouring size does not match hypergraph");
    return OddAudit(h.edges(), std::move(colouring));
}

void OddAudit::toggle(int cid, Colour c)
{
    auto &bit = parity_[index(cid, c)];
    bit ^= 1;
    odd_count_[cid] += bit ? 1 : -1;
    odd_xor_[cid] ^= c;
}

void OddAudit::recolour(Vertex v, Colour from, Colour to)
{
    if (v < 0 || v >= colouring_.order())
        throw std::out_of_range("recolour: vertex out of range");
    if (colouring_.colour[v] != from)
        throw std::logic_error("recolour: vertex " + std::to_string(v) + " has colour " +
                               std::to_string(colouring_.colour[v]) + ", not " + std::to_string(from));
    if (to < 0 || to > colouring_.k)
        throw std::invalid_argument("recolour: colour outside palette");
    if (from == to)
        return;
    for (int cid : containing_[v]) {
        if (from != unassigned) {
            toggle(cid, from);
            --coloured_[cid];
        }
        if (to != unassigned) {
            toggle(cid, to);
            ++coloured_[cid];
        }
    }
    colouring_.colour[v] = to;
}

std::optional<Colour> OddAudit::witness(int cid) const
{
    if (odd_count_[cid] == 1)
        return odd_xor_[cid];
    return std::nullopt;
}

std::vector<Colour> OddAudit::odd_colours(int cid) const
{
    std::vector<Colour> out;
    out.reserve(odd_count_[cid]);
    for (Colour c = 1; c <= colouring_.k && static_cast<int>(out.size()) < odd_count_[cid]; ++c)
        if (is_odd(cid, c))
            out.push_back(c);
    return out;
}

int OddAudit::required(int cid, int h) const
{
    return std::min<int>(h, static_cast<int>(members_[cid].size()));
}

OddRecord OddAudit::record(int cid, int h) const
{
    OddRecord r;
    r.constraint = cid;
    r.odd = odd_colours(cid);
    r.witness = witness(cid);
    r.required = required(cid, h);
    r.satisfied = satisfied(cid, h);
    return r;
}

bool OddAudit::operator==(const OddAudit &other) const
{
    return colouring_ == other.colouring_ && members_ == other.members_ && parity_ == other.parity_ &&
           odd_count_ == other.odd_count_ && odd_xor_ == other.odd_xor_ && coloured_ == other.coloured_;
}

} // namespace oddcol
