#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unprj/check.hpp"
#include "unprj/hilbert.hpp"

namespace unprj {

// Graded Betti numbers in the convention F_i = (+)_j S^{beta_{i,j}}(-i-j).
class BettiTable {
  public:
    using Key = std::pair<int, int>;  // (i, j)

    void add(int i, int j, long long count) {
        if (count == 0) return;
        auto [it, fresh] = entries_.emplace(Key{i, j}, count);
        if (!fresh) {
            it->second += count;
            if (it->second == 0) entries_.erase(it);
        }
    }
    long long get(int i, int j) const {
        auto it = entries_.find(Key{i, j});
        return it == entries_.end() ? 0 : it->second;
    }
    const std::map<Key, long long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // reg M = max{ j : beta_{i,j} != 0 }
    int regularity() const {
        UNPRJ_CHECK(!entries_.empty(), "BettiTable: regularity of zero module");
        int r = entries_.begin()->first.second;
        for (const auto& [k, v] : entries_) r = std::max(r, k.second);
        return r;
    }
    // pd M = max{ i : beta_{i,j} != 0 }
    int projective_dimension() const {
        UNPRJ_CHECK(!entries_.empty(), "BettiTable: pd of zero module");
        int p = 0;
        for (const auto& [k, v] : entries_) p = std::max(p, k.first);
        return p;
    }
    int min_i() const {
        int m = entries_.empty() ? 0 : entries_.begin()->first.first;
        for (const auto& [k, v] : entries_) m = std::min(m, k.first);
        return m;
    }
    int min_j() const {
        int m = entries_.empty() ? 0 : entries_.begin()->first.second;
        for (const auto& [k, v] : entries_) m = std::min(m, k.second);
        return m;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [k, v] : entries_) t += v;
        return t;
    }

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
    bool operator!=(const BettiTable& o) const { return entries_ != o.entries_; }

    BettiTable operator+(const BettiTable& o) const {
        BettiTable r = *this;
        for (const auto& [k, v] : o.entries_) r.add(k.first, k.second, v);
        return r;
    }

    // alternating generating function sum_{i,j} (-1)^i t^{i+j} beta_{i,j},
    // exponent -> coefficient
    std::map<int, long long> alternating_gf() const {
        std::map<int, long long> gf;
        for (const auto& [k, v] : entries_) {
            long long s = (k.first % 2 == 0) ? v : -v;
            gf[k.first + k.second] += s;
            if (gf[k.first + k.second] == 0) gf.erase(k.first + k.second);
        }
        return gf;
    }

    // rows = j, columns = i (default layout); transposed gives the
    // i-rows/j-columns layout
    std::string str(bool transposed = false) const {
        if (entries_.empty()) return "(zero)\n";
        int i0 = min_i(), i1 = projective_dimension();
        int j0 = min_j(), j1 = regularity();
        std::ostringstream os;
        auto pad = [&](const std::string& s) {
            return std::string(s.size() >= 6 ? 1 : 6 - s.size(), ' ') + s;
        };
        auto label = [&](long long v) { return pad(std::to_string(v)); };
        auto cell = [&](long long v) { return pad(v == 0 ? "." : std::to_string(v)); };
        if (!transposed) {
            os << "  j\\i ";
            for (int i = i0; i <= i1; ++i) os << label(i) << " ";
            os << "\n";
            for (int j = j0; j <= j1; ++j) {
                os << label(j) << " ";
                for (int i = i0; i <= i1; ++i) os << cell(get(i, j)) << " ";
                os << "\n";
            }
        } else {
            os << "  i\\j ";
            for (int j = j0; j <= j1; ++j) os << label(j) << " ";
            os << "\n";
            for (int i = i0; i <= i1; ++i) {
                os << label(i) << " ";
                for (int j = j0; j <= j1; ++j) os << cell(get(i, j)) << " ";
                os << "\n";
            }
        }
        return os.str();
    }

  private:
    std::map<Key, long long> entries_;
};

// Collection of tables indexed by integers.
using TableSequence = std::map<int, BettiTable>;

struct CancellationMove {
    int i, j;   // upper slot (subtracted in table k)
    int k, l;   // table index and positive drop; partner slot is (i-1, j+1) in table k-l
    long long count;
};

enum class CancellationVerdict { Cancels, Refuted, NecessaryOnly };

struct CancellationResult {
    CancellationVerdict verdict;
    bool necessary_condition_holds = false;
    std::string detail;
    std::vector<CancellationMove> moves;  // certificate when verdict == Cancels
};

// Checks whether `target` has a decomposition reachable from `seq` by
// legal cancellation moves: a move subtracts a common nonnegative
// integer from (B_k)_{i,j} and (B_{k-l})_{i-1,j+1} with l > 0.
//
// The alternating generating function is invariant under moves, so
// equality of gf(sum) and gf(target) is checked first.  Because every
// move pairs adjacent slots on one antidiagonal, the number of move
// units between slot (i,j) and (i-1,j+1) is forced by telescoping the
// per-slot surpluses from the top of each antidiagonal; it only remains
// to distribute the units over table indices with k (upper) > k-l
// (lower), which a bounded backtracking search settles exactly.
inline CancellationResult cancellation_check(const TableSequence& seq, const BettiTable& target,
                                             std::size_t state_budget = 10000) {
    CancellationResult res;
    BettiTable total;
    for (const auto& [k, b] : seq) total = total + b;

    // necessary condition
    auto gf_total = total.alternating_gf();
    auto gf_target = target.alternating_gf();
    if (gf_total != gf_target) {
        res.verdict = CancellationVerdict::Refuted;
        res.necessary_condition_holds = false;
        int bad = 0;
        for (const auto& [e, c] : gf_total)
            if (gf_target.count(e) == 0 || gf_target.at(e) != c) {
                bad = e;
                break;
            }
        if (bad == 0)
            for (const auto& [e, c] : gf_target)
                if (gf_total.count(e) == 0 || gf_total.at(e) != c) {
                    bad = e;
                    break;
                }
        res.detail = "alternating-sum mismatch at t^" + std::to_string(bad);
        return res;
    }
    res.necessary_condition_holds = true;

    // surplus per slot
    std::map<BettiTable::Key, long long> surplus;
    for (const auto& [k, v] : total.entries()) surplus[k] += v;
    for (const auto& [k, v] : target.entries()) surplus[k] -= v;
    for (auto it = surplus.begin(); it != surplus.end();) {
        if (it->second == 0)
            it = surplus.erase(it);
        else
            ++it;
    }
    for (const auto& [k, v] : surplus)
        if (v < 0) {
            res.verdict = CancellationVerdict::Refuted;
            res.detail = "target exceeds available total at (i,j)=(" + std::to_string(k.first) +
                         "," + std::to_string(k.second) + ")";
            return res;
        }

    // forced per-antidiagonal unit flow: flow(i,j) pairs slot (i,j)
    // with (i-1,j+1)
    std::map<BettiTable::Key, long long> flow;  // keyed by upper slot
    std::map<int, std::pair<int, int>> irange;  // antidiagonal s -> [imin, imax]
    for (const auto& [k, v] : surplus) {
        int s = k.first + k.second;
        auto it = irange.find(s);
        if (it == irange.end())
            irange[s] = {k.first, k.first};
        else {
            it->second.first = std::min(it->second.first, k.first);
            it->second.second = std::max(it->second.second, k.first);
        }
    }
    for (const auto& [s, rng] : irange) {
        long long carry = 0;  // flow from the slot above (i+1, j-1)
        for (int i = rng.second; i >= rng.first; --i) {
            int j = s - i;
            long long t = 0;
            if (auto it = surplus.find({i, j}); it != surplus.end()) t = it->second;
            long long f = t - carry;  // units pairing (i,j) with (i-1,j+1)
            if (f < 0) {
                res.verdict = CancellationVerdict::Refuted;
                res.detail = "forced flow negative at (i,j)=(" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                return res;
            }
            if (f > 0) flow[{i, j}] = f;
            carry = f;
        }
        if (carry != 0) {
            res.verdict = CancellationVerdict::Refuted;
            res.detail = "unbalanced antidiagonal t^" + std::to_string(s);
            return res;
        }
    }

    if (flow.empty()) {
        res.verdict = CancellationVerdict::Cancels;
        res.detail = "no moves required";
        return res;
    }

    // distribute units over tables: residual capacity per (slot, table)
    std::map<std::pair<BettiTable::Key, int>, long long> cap;
    std::vector<int> table_ids;
    for (const auto& [k, b] : seq) {
        table_ids.push_back(k);
        for (const auto& [key, v] : b.entries()) cap[{key, k}] = v;
    }

    // per antidiagonal, assign each flow step: choose per-table splits
    // for the upper role at (i,j) and the lower role at (i-1,j+1)
    std::size_t states = 0;
    std::vector<CancellationMove> moves;

    // recursive helper over the list of flow slots (processed top-down
    // per diagonal; map iteration order groups diagonals together)
    std::vector<std::pair<BettiTable::Key, long long>> flows(flow.begin(), flow.end());
    std::sort(flows.begin(), flows.end(), [](const auto& a, const auto& b) {
        int sa = a.first.first + a.first.second, sb = b.first.first + b.first.second;
        if (sa != sb) return sa < sb;
        return a.first.first > b.first.first;  // top (large i) first
    });

    std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
        if (idx == flows.size()) return true;
        if (++states > state_budget) return false;
        auto [upper, units] = flows[idx];
        BettiTable::Key lower{upper.first - 1, upper.second + 1};
        // enumerate matchings unit by unit: pick (k_up, k_low) with
        // k_up > k_low, both with residual capacity
        std::function<bool(long long)> place = [&](long long left) -> bool {
            if (left == 0) return assign(idx + 1);
            if (++states > state_budget) return false;
            for (int kl : table_ids) {
                auto cl = cap.find({lower, kl});
                if (cl == cap.end() || cl->second <= 0) continue;
                for (int ku : table_ids) {
                    if (ku <= kl) continue;
                    auto cu = cap.find({upper, ku});
                    if (cu == cap.end() || cu->second <= 0) continue;
                    long long most = std::min({left, cu->second, cl->second});
                    for (long long take = most; take >= 1; --take) {
                        cu->second -= take;
                        cl->second -= take;
                        moves.push_back({upper.first, upper.second, ku, ku - kl, take});
                        if (place(left - take)) return true;
                        moves.pop_back();
                        cu->second += take;
                        cl->second += take;
                        if (states > state_budget) return false;
                    }
                }
            }
            return false;
        };
        return place(units);
    };

    if (assign(0)) {
        res.verdict = CancellationVerdict::Cancels;
        res.moves = moves;
        res.detail = std::to_string(moves.size()) + " move(s)";
        return res;
    }
    if (states > state_budget) {
        res.verdict = CancellationVerdict::NecessaryOnly;
        res.detail = "search budget exhausted; necessary condition holds";
        return res;
    }
    res.verdict = CancellationVerdict::Refuted;
    res.detail = "no table assignment realizes the forced flow";
    return res;
}

// Replays a move list: verifies every subtraction stays nonnegative and
// the final sequence sums to the target.
inline bool verify_cancellation(const TableSequence& seq, const BettiTable& target,
                                const std::vector<CancellationMove>& moves) {
    TableSequence work = seq;
    for (const auto& mv : moves) {
        if (mv.l <= 0 || mv.count < 0) return false;
        BettiTable& up = work[mv.k];
        BettiTable& low = work[mv.k - mv.l];
        if (up.get(mv.i, mv.j) < mv.count) return false;
        if (low.get(mv.i - 1, mv.j + 1) < mv.count) return false;
        up.add(mv.i, mv.j, -mv.count);
        low.add(mv.i - 1, mv.j + 1, -mv.count);
    }
    BettiTable total;
    for (const auto& [k, b] : work) total = total + b;
    return total == target;
}

}  // namespace unprj
