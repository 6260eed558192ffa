#pragma once

/*
  Rectangular lattice systems and their partition functions.

  Rows are numbered 1..r top to bottom; row i carries the variable z_i.
  Columns are numbered 0..N-1 from the right.  The top boundary places a
  colored edge in column k for every part k of the strict label vector mu
  (the color is the column's own); bottom edges are uncolored.

  Down/right families (Colored, Supercolored, Delta, DeltaPrime): left
  boundary uncolored, paths exit on the right edge of row i with the
  prescribed boundary color.  Gamma reverses the horizontal flow: right
  boundary uncolored, paths exit on the left.
*/

#include <algorithm>
#include <vector>

#include "laurent.hpp"
#include "weights.hpp"

namespace colorice {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SystemSpec {
    Family family = Family::Colored;
    Specialization spec = Specialization::generic();
    int palette = 1;                // m (the Gauss modulus for the metaplectic tables)
    std::vector<long long> mu;      // strictly decreasing, parts >= 0
    std::vector<int> boundary;      // row exit colors: 1..m colored, 0..m-1 otherwise
    int columns = 0;                // 0 = smallest multiple of palette covering mu

    int rows() const { return static_cast<int>(mu.size()); }

    int column_count() const {
        long long top = mu.empty() ? 0 : mu.front();
        long long needed = ((top + 1 + palette - 1) / palette) * palette;
        long long n = columns > 0 ? columns : std::max<long long>(needed, palette);
        return static_cast<int>(n);
    }

    bool colored_palette() const { return family == Family::Colored; }

    int column_color(int k) const {
        return colored_palette() ? res_pos(-k, palette) : res_mod(k, palette);
    }

    VertexWeight weight(int column, int left, int top, int right, int bottom) const {
        const int cc = column_color(column);
        switch (family) {
            case Family::Colored:
                return colored_weight(palette, spec, cc, left, top, right, bottom);
            case Family::Supercolored:
                return supercolored_weight(palette, spec, cc, left, top, right, bottom);
            case Family::DeltaPrime:
                return delta_prime_weight(palette, cc, left, top, right, bottom);
            case Family::Delta:
                return delta_weight(palette, cc, left, top, right, bottom);
            case Family::Gamma:
                return gamma_weight(palette, cc, left, top, right, bottom);
        }
        throw LatticeError("bad family");
    }

    void validate() const {
        if (palette < 1) throw LatticeError("palette must be positive");
        if (boundary.size() != mu.size()) throw LatticeError("boundary length != rows");
        for (std::size_t i = 0; i + 1 < mu.size(); ++i)
            if (mu[i] <= mu[i + 1]) throw LatticeError("mu must be strictly decreasing");
        if (!mu.empty() && mu.back() < 0) throw LatticeError("mu parts must be nonnegative");
        if (!mu.empty() && mu.front() >= column_count())
            throw LatticeError("columns too small for mu");
        for (int c : boundary) {
            bool ok = colored_palette() ? (c >= 1 && c <= palette) : (c >= 0 && c < palette);
            if (!ok) throw LatticeError("boundary color out of range");
        }
        if (family == Family::Colored || family == Family::Supercolored) {
            if (spec.mode == Mode::Metaplectic && spec.gauss_n != palette)
                throw LatticeError("metaplectic modulus must equal palette");
        }
    }

    std::vector<int> top_boundary() const {
        std::vector<int> top(column_count(), EMPTY);
        for (long long k : mu) top[static_cast<std::size_t>(k)] = column_color(static_cast<int>(k));
        return top;
    }
};

struct PartitionFunction {
    Laurent value;
    long long states = 0;  // admissible fillings of the whole lattice
};

namespace detail {

struct RowOutcome {
    std::vector<int> bottom;
    Scalar coeff;
    int zdeg;
};

// All admissible fillings of one row given its top edge labels.
inline std::vector<RowOutcome> row_fillings(const SystemSpec& s, const std::vector<int>& top,
                                            int exit_color) {
    const int N = static_cast<int>(top.size());
    const bool gamma = s.family == Family::Gamma;
    std::vector<RowOutcome> out;
    std::vector<int> bottom(N, EMPTY);

    // Down/right: scan columns N-1 .. 0 (left to right), carry the `left`
    // label, require right == exit_color at the end.  Gamma: scan 0 .. N-1
    // (right to left), carry `right`, require left == exit_color at the end.
    auto rec = [&](auto&& self, int pos, int carry, Scalar coeff, int zdeg) -> void {
        if (gamma ? pos >= N : pos < 0) {
            if (carry == exit_color) out.push_back({bottom, std::move(coeff), zdeg});
            return;
        }
        const int col = pos;
        const int t = top[col];
        // candidate outputs: pass or turn
        const int cand[2][2] = {{carry, t}, {t, carry}};
        const int ncand = (carry == t) ? 1 : 2;
        for (int c = 0; c < ncand; ++c) {
            int out_h = cand[c][0], out_v = cand[c][1];
            VertexWeight w = gamma ? s.weight(col, out_h, t, carry, out_v)
                                   : s.weight(col, carry, t, out_h, out_v);
            if (!w.admissible()) continue;
            bottom[col] = out_v;
            self(self, gamma ? pos + 1 : pos - 1, out_h, coeff * w.coeff, zdeg + w.zdeg);
        }
        bottom[col] = EMPTY;
    };
    rec(rec, gamma ? 0 : N - 1, EMPTY, Scalar::one(), 0);
    return out;
}

}  // namespace detail

inline PartitionFunction partition_function_full(const SystemSpec& s) {
    s.validate();
    const int r = s.rows();
    const int N = s.column_count();

    struct Acc {
        Laurent f;
        long long states;
    };
    std::map<std::vector<int>, Acc> layer;
    layer.emplace(s.top_boundary(), Acc{Laurent::one(r), 1});

    for (int i = 0; i < r; ++i) {
        std::map<std::vector<int>, Acc> next;
        for (const auto& [top, acc] : layer) {
            for (const auto& fill : detail::row_fillings(s, top, s.boundary[i])) {
                Laurent zpow = Laurent::var(r, i, fill.zdeg);
                Laurent contrib = fill.coeff * (acc.f * zpow);
                auto it = next.find(fill.bottom);
                if (it == next.end()) {
                    next.emplace(fill.bottom, Acc{std::move(contrib), acc.states});
                } else {
                    it->second.f += contrib;
                    it->second.states += acc.states;
                }
            }
        }
        layer = std::move(next);
    }

    PartitionFunction pf{Laurent::zero(r), 0};
    auto it = layer.find(std::vector<int>(N, EMPTY));
    if (it != layer.end()) {
        pf.value = it->second.f;
        pf.states = it->second.states;
    }
    return pf;
}

inline Laurent partition_function(const SystemSpec& s) { return partition_function_full(s).value; }

}  // namespace colorice
