#include "hybrid/tableaux.hpp"

#include <numeric>

namespace hybrid {

bool hybrid_less(HybridRelation kind, long long i, long long j) {
    auto identity = [](long long n) { return n; };
    HybridSet<long long> interval =
        kind == HybridRelation::Strict
            ? ellipsis<long long>(identity, 0, j - 1)
            : ellipsis<long long>(identity, 1, j);
    return interval.contains(i);
}

long long GenPartition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

namespace {

// Ascending list of all v' with v' << v (resp. weakly below v).
std::vector<long long> candidates_below(HybridRelation kind, long long v) {
    std::vector<long long> out;
    long long lo, hi;
    if (kind == HybridRelation::Strict) {
        if (v >= 1) {
            lo = 0;
            hi = v - 1;
        } else {
            lo = v;
            hi = -1;
        }
    } else {
        if (v >= 1) {
            lo = 1;
            hi = v;
        } else {
            lo = v + 1;
            hi = 0;
        }
    }
    for (long long x = lo; x <= hi; ++x) out.push_back(x);
    return out;
}

}  // namespace

std::vector<GenPartition> enumerate_partitions(HybridRelation kind, long long width,
                                               long long length,
                                               std::optional<long long> sum) {
    std::vector<GenPartition> out;
    if (length < 0) return out;
    std::vector<long long> parts;
    std::function<void(long long)> rec = [&](long long prev) {
        if (static_cast<long long>(parts.size()) == length) {
            if (!sum || std::accumulate(parts.begin(), parts.end(), 0LL) == *sum)
                out.push_back(GenPartition{parts, width, kind});
            return;
        }
        for (long long next : candidates_below(kind, prev)) {
            parts.push_back(next);
            rec(next);
            parts.pop_back();
        }
    };
    rec(width);
    std::sort(out.begin(), out.end(),
              [](const GenPartition& a, const GenPartition& b) { return a.parts < b.parts; });
    return out;
}

HybridSet<Cell> ferrers(const GenPartition& shape) {
    HybridSet<Cell> out;
    for (size_t i = 0; i < shape.parts.size(); ++i) {
        long long row = static_cast<long long>(i) + 1;
        out = out + ellipsis<Cell>(
                        [row](long long j) { return Cell{row, j}; }, 1,
                        shape.parts[i]);
    }
    return out;
}

namespace {

// Columns of row i of the diagram, ascending; empty for a zero part.
std::vector<long long> row_columns(long long part) {
    std::vector<long long> cols;
    if (part >= 1)
        for (long long j = 1; j <= part; ++j) cols.push_back(j);
    else if (part <= -1)
        for (long long j = part + 1; j <= 0; ++j) cols.push_back(j);
    return cols;
}

long long row_sign(long long part) { return part > 0 ? 1 : -1; }

}  // namespace

std::vector<Tableau01> enumerate_tableaux(const GenPartition& shape) {
    std::vector<Tableau01> out;
    for (long long p : shape.parts)
        if (p == 0) return out;  // a zero-length row cannot hold its 1

    std::vector<long long> ones(shape.parts.size());
    std::function<void(size_t)> rec = [&](size_t row) {
        if (row == shape.parts.size()) {
            out.push_back(Tableau01{shape, ones});
            return;
        }
        for (long long c : row_columns(shape.parts[row])) {
            ones[row] = c;
            rec(row + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

// Doubled statistics: the 1 in a row contributes half the row sign to both
// counts, each 0 contributes the row sign on its side of the 1.
std::pair<long long, long long> statistics2(const Tableau01& t) {
    long long inv = 0, nin = 0;
    for (size_t i = 0; i < t.shape.parts.size(); ++i) {
        long long sgn = row_sign(t.shape.parts[i]);
        long long one_col = t.ones[i];
        inv += sgn;
        nin += sgn;
        for (long long c : row_columns(t.shape.parts[i])) {
            if (c < one_col)
                inv += 2 * sgn;
            else if (c > one_col)
                nin += 2 * sgn;
        }
    }
    return {inv, nin};
}

}  // namespace

long long inv2(const Tableau01& t) { return statistics2(t).first; }
long long nin2(const Tableau01& t) { return statistics2(t).second; }

LaurentPoly tableau_sum(StirlingKind kind, long long n, long long k) {
    long long length = n - k;
    long long width = kind == StirlingKind::First ? n : k;
    HybridRelation rel =
        kind == StirlingKind::First ? HybridRelation::Strict : HybridRelation::Weak;

    LaurentPoly total;
    for (const GenPartition& shape : enumerate_partitions(rel, width, length)) {
        for (const Tableau01& t : enumerate_tableaux(shape)) {
            auto [inv, nin] = statistics2(t);
            total += LaurentPoly::monomial(Rational(1), {{"q", inv}, {"p", nin}});
        }
    }
    return total;
}

}  // namespace hybrid
