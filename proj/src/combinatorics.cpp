#include "kronlab/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace kronlab {

SetPartition::SetPartition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks)
    : ground_(ground), blocks_(std::move(blocks)), owner_(ground, ground) {
    for (auto& b : blocks_) {
        if (b.empty())
            throw PartitionError("combinatorics", "partition has an empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t j = 0; j < blocks_.size(); ++j)
        for (std::size_t x : blocks_[j]) {
            if (x < 1 || x > ground_)
                throw PartitionError("combinatorics", "element " + std::to_string(x) + " outside 1.." +
                                                          std::to_string(ground_));
            if (owner_[x - 1] != ground_)
                throw PartitionError("combinatorics", "element " + std::to_string(x) + " in two blocks");
            owner_[x - 1] = j;
        }
    for (std::size_t x = 0; x < ground_; ++x)
        if (owner_[x] == ground_)
            throw PartitionError("combinatorics", "element " + std::to_string(x + 1) + " not covered");
}

SetPartition SetPartition::from_rgs(const std::vector<std::size_t>& rgs) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] > blocks.size())
            throw PartitionError("combinatorics", "not a restricted growth string");
        if (rgs[i] == blocks.size())
            blocks.emplace_back();
        blocks[rgs[i]].push_back(i + 1);
    }
    return SetPartition(rgs.size(), std::move(blocks));
}

SetPartition SetPartition::unit(std::size_t n) { return from_rgs(std::vector<std::size_t>(n, 0)); }

SetPartition SetPartition::discrete(std::size_t n) {
    std::vector<std::size_t> rgs(n);
    for (std::size_t i = 0; i < n; ++i)
        rgs[i] = i;
    return from_rgs(rgs);
}

std::vector<std::size_t> SetPartition::canonical_sdr() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks_)
        out.push_back(b.front());
    return out;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        os << (j ? "," : "") << '{';
        for (std::size_t k = 0; k < blocks_[j].size(); ++k)
            os << (k ? "," : "") << blocks_[j][k];
        os << '}';
    }
    os << '}';
    return os.str();
}

FiniteFunction::FiniteFunction(std::size_t range, std::vector<std::size_t> values)
    : range_(range), values_(std::move(values)) {
    for (std::size_t v : values_)
        if (v < 1 || v > range_)
            throw RangeError("combinatorics", "function value " + std::to_string(v) + " outside 1.." +
                                                  std::to_string(range_));
}

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::optional<std::size_t> k) {
    if (n < 1)
        throw RangeError("combinatorics", "partitions need n >= 1");
    if (k && (*k < 1 || *k > n))
        throw RangeError("combinatorics", "block count " + std::to_string(*k) + " outside 1.." + std::to_string(n));
    std::vector<SetPartition> out;
    // rgs[i] <= 1 + max(rgs[0..i)); odometer over restricted growth strings.
    std::vector<std::size_t> rgs(n, 0), maxima(n, 0);
    for (;;) {
        std::size_t blocks = maxima[n - 1] + 1;
        if (!k || blocks == *k)
            out.push_back(SetPartition::from_rgs(rgs));
        std::size_t i = n;
        bool advanced = false;
        while (i > 1) {
            --i;
            if (rgs[i] <= maxima[i - 1]) {
                ++rgs[i];
                maxima[i] = std::max(maxima[i - 1], rgs[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    rgs[j] = 0;
                    maxima[j] = maxima[i];
                }
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
    return out;
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
    // S(n,k) = k S(n-1,k) + S(n-1,k-1)
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 2, 0));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return k <= n ? s[n][k] : 0;
}

std::uint64_t bell(std::size_t n) {
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row)
            next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

SetPartition coimage(const FiniteFunction& f) {
    std::map<std::size_t, std::vector<std::size_t>> fibres;
    for (std::size_t x = 1; x <= f.domain(); ++x)
        fibres[f(x)].push_back(x);
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [y, xs] : fibres)
        blocks.push_back(std::move(xs));
    return SetPartition(f.domain(), std::move(blocks));
}

bool refines(const SetPartition& finer, const SetPartition& coarser) {
    if (finer.ground() != coarser.ground())
        throw PartitionError("combinatorics", "partitions of different ground sets");
    for (const auto& b : finer.blocks()) {
        std::size_t owner = coarser.block_of(b.front());
        for (std::size_t x : b)
            if (coarser.block_of(x) != owner)
                return false;
    }
    return true;
}

HasseDiagram covering_edges(std::size_t n) {
    if (n > max_hasse_ground)
        throw RangeError("combinatorics", "Hasse diagram limited to n <= " + std::to_string(max_hasse_ground));
    HasseDiagram h;
    h.vertices = enumerate_partitions(n);
    std::size_t v = h.vertices.size();
    std::vector<std::vector<bool>> below(v, std::vector<bool>(v, false));
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y)
            below[x][y] = x != y && refines(h.vertices[x], h.vertices[y]);
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = 0; y < v; ++y) {
            if (!below[x][y])
                continue;
            bool cover = true;
            for (std::size_t z = 0; z < v && cover; ++z)
                if (below[x][z] && below[z][y])
                    cover = false;
            if (cover)
                h.covers.emplace_back(x, y);
        }
    return h;
}

std::string HasseDiagram::to_dot() const {
    std::ostringstream os;
    os << "digraph refinement {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        os << "  p" << i << " [label=\"" << vertices[i].to_string() << "\"];\n";
    for (auto [x, y] : covers)
        os << "  p" << y << " -> p" << x << ";\n";
    os << "}\n";
    return os.str();
}

FunctionClass parse_function_class(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "snc")
        return FunctionClass::snc;
    if (s == "wnc")
        return FunctionClass::wnc;
    if (s == "inj")
        return FunctionClass::inj;
    if (s == "per")
        return FunctionClass::per;
    throw ParseError("combinatorics", "unknown function class '" + name + "'");
}

std::string function_class_name(FunctionClass cls) {
    switch (cls) {
    case FunctionClass::snc: return "SNC";
    case FunctionClass::wnc: return "WNC";
    case FunctionClass::inj: return "INJ";
    case FunctionClass::per: return "PER";
    }
    return "?";
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::uint64_t falling(std::uint64_t p, std::uint64_t n) {
    if (n > p)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i)
        r *= p - i;
    return r;
}

bool member(FunctionClass cls, const std::vector<std::size_t>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            switch (cls) {
            case FunctionClass::snc:
                if (!(f[i] < f[j]))
                    return false;
                break;
            case FunctionClass::wnc:
                if (!(f[i] <= f[j]))
                    return false;
                break;
            case FunctionClass::inj:
            case FunctionClass::per:
                if (f[i] == f[j])
                    return false;
                break;
            }
        }
    return true;
}

} // namespace

std::uint64_t count_functions(FunctionClass cls, std::size_t n, std::size_t p) {
    switch (cls) {
    case FunctionClass::snc: return binomial(p, n);
    case FunctionClass::wnc:
        if (n == 0)
            return 1;
        return p == 0 ? 0 : binomial(p + n - 1, n);
    case FunctionClass::inj: return falling(p, n);
    case FunctionClass::per: return p == n ? falling(n, n) : 0;
    }
    return 0;
}

std::vector<FiniteFunction> enumerate_functions(FunctionClass cls, std::size_t n, std::size_t p) {
    std::vector<FiniteFunction> out;
    if (cls == FunctionClass::per && p != n)
        return out;
    if (n == 0) {
        out.emplace_back(p, std::vector<std::size_t>{});
        return out;
    }
    if (p == 0)
        return out;
    // Depth-first over p^n in lex order, pruning prefixes that already fail.
    std::vector<std::size_t> f;
    f.reserve(n);
    auto rec = [&](auto&& self) -> void {
        if (f.size() == n) {
            out.emplace_back(p, f);
            return;
        }
        for (std::size_t v = 1; v <= p; ++v) {
            f.push_back(v);
            if (member(cls, f))
                self(self);
            f.pop_back();
        }
    };
    rec(rec);
    return out;
}

PositionRank position_rank(std::size_t lambda, const std::vector<std::size_t>& subset, std::size_t x) {
    if (x < 1 || x > lambda)
        throw RangeError("combinatorics", "element " + std::to_string(x) + " outside 1.." + std::to_string(lambda));
    std::vector<std::size_t> s = subset;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 1 || s.back() > lambda))
        throw RangeError("combinatorics", "subset leaves 1.." + std::to_string(lambda));
    PositionRank pr{0, 0};
    for (std::size_t t : s) {
        if (t <= x)
            ++pr.position;
        if (t < x)
            ++pr.rank;
    }
    return pr;
}

} // namespace kronlab
