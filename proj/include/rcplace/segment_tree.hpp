#ifndef RCPLACE_SEGMENT_TREE_HPP
#define RCPLACE_SEGMENT_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace rcplace {

// Closed/open interval over coordinates as reported by a coverage query.
struct Interval {
    Coord lo = 0;
    Coord hi = 0;
    bool lo_closed = true;
    bool hi_closed = true;

    constexpr bool degenerate() const { return lo == hi; }
    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

// Inclusive range of elementary leaves.
struct LeafRun {
    std::size_t first = 0;
    std::size_t last = 0;
    friend constexpr bool operator==(const LeafRun&, const LeafRun&) = default;
};

// Segment tree over the elementary decomposition of a fixed endpoint set
// v_0 < v_1 < ... < v_{k-1}. Leaves alternate between the degenerate point
// [v_j, v_j] (leaf 2j) and the open gap (v_j, v_{j+1}) (leaf 2j+1), so two
// intervals that merely share an endpoint never merge into one covered run.
class SegmentTree {
public:
    // Whether an inserted interval [b, e] also covers its endpoint leaves.
    enum class Ends { open, closed };

    explicit SegmentTree(std::vector<Coord> endpoints) : values_(std::move(endpoints)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
        if (values_.empty()) throw InvalidInput("segment tree needs at least one endpoint");
        leaves_ = 2 * values_.size() - 1;
        nodes_.assign(4 * leaves_, Node{});
    }

    std::size_t leaf_count() const { return leaves_; }
    const std::vector<Coord>& endpoints() const { return values_; }

    static constexpr bool is_point_leaf(std::size_t leaf) { return leaf % 2 == 0; }
    Coord leaf_lo(std::size_t leaf) const { return values_[leaf / 2]; }
    Coord leaf_hi(std::size_t leaf) const { return values_[(leaf + 1) / 2]; }

    std::size_t index_of(Coord v) const {
        auto it = std::lower_bound(values_.begin(), values_.end(), v);
        if (it == values_.end() || *it != v)
            throw UnknownEndpoint("coordinate " + std::to_string(v) + " is not an endpoint of the tree");
        return 2 * static_cast<std::size_t>(it - values_.begin());
    }

    void insert(Coord b, Coord e, Ends ends = Ends::open) { apply(b, e, ends, +1); }

    // Removes an interval previously inserted with the same ends.
    void remove(Coord b, Coord e, Ends ends = Ends::open) { apply(b, e, ends, -1); }

    // Maximal uncovered pieces of the closed query range [b, e], sorted.
    std::vector<Interval> uncovered_within(Coord b, Coord e) const {
        std::vector<Interval> out;
        if (e < b) return out;
        for (const LeafRun& run : uncovered_leaves(index_of(b), index_of(e))) {
            out.push_back(Interval{leaf_lo(run.first), leaf_hi(run.last), is_point_leaf(run.first),
                                   is_point_leaf(run.last)});
        }
        return out;
    }

    // Maximal runs of uncovered leaves within [first, last]. Cost is
    // O((1 + runs) log n).
    std::vector<LeafRun> uncovered_leaves(std::size_t first, std::size_t last) const {
        std::vector<LeafRun> out;
        if (first > last || last >= leaves_) return out;
        collect(1, 0, leaves_ - 1, first, last, out);
        return out;
    }

    // Number of inserted intervals covering a leaf.
    int coverage(std::size_t leaf) const {
        int total = 0;
        std::size_t node = 1, lo = 0, hi = leaves_ - 1;
        while (true) {
            total += nodes_[node].count;
            if (lo == hi) break;
            std::size_t mid = lo + (hi - lo) / 2;
            if (leaf <= mid) {
                node = 2 * node;
                hi = mid;
            } else {
                node = 2 * node + 1;
                lo = mid + 1;
            }
        }
        return total;
    }

    // Nodes visited by the last insert/remove.
    std::size_t last_touches() const { return touches_; }

private:
    struct Node {
        std::int32_t count = 0;
        bool full = false;   // every leaf below is covered
        bool empty = true;   // no leaf below is covered by this subtree's counts
    };

    std::vector<Coord> values_;
    std::size_t leaves_ = 0;
    std::vector<Node> nodes_;
    std::size_t touches_ = 0;

    void apply(Coord b, Coord e, Ends ends, int delta) {
        std::size_t first = index_of(b);
        std::size_t last = index_of(e);
        if (ends == Ends::open) {
            if (last <= first + 1) {
                touches_ = 0;
                return;
            }
            ++first;
            --last;
        } else if (last < first) {
            touches_ = 0;
            return;
        }
        if (delta < 0 && !removable(1, 0, leaves_ - 1, first, last))
            throw InvalidInput("removing an interval that was never inserted");
        touches_ = 0;
        update(1, 0, leaves_ - 1, first, last, delta);
    }

    void pull(std::size_t node, bool leaf) {
        Node& n = nodes_[node];
        if (n.count > 0) {
            n.full = true;
            n.empty = false;
        } else if (leaf) {
            n.full = false;
            n.empty = true;
        } else {
            n.full = nodes_[2 * node].full && nodes_[2 * node + 1].full;
            n.empty = nodes_[2 * node].empty && nodes_[2 * node + 1].empty;
        }
    }

    void update(std::size_t node, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, int delta) {
        ++touches_;
        if (b < lo || hi < a) return;
        if (a <= lo && hi <= b) {
            nodes_[node].count += delta;
            pull(node, lo == hi);
            return;
        }
        std::size_t mid = lo + (hi - lo) / 2;
        update(2 * node, lo, mid, a, b, delta);
        update(2 * node + 1, mid + 1, hi, a, b, delta);
        pull(node, false);
    }

    bool removable(std::size_t node, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b) const {
        if (b < lo || hi < a) return true;
        if (a <= lo && hi <= b) return nodes_[node].count > 0;
        std::size_t mid = lo + (hi - lo) / 2;
        return removable(2 * node, lo, mid, a, b) && removable(2 * node + 1, mid + 1, hi, a, b);
    }

    static void emit(std::vector<LeafRun>& out, std::size_t first, std::size_t last) {
        if (!out.empty() && out.back().last + 1 == first) {
            out.back().last = last;
        } else {
            out.push_back(LeafRun{first, last});
        }
    }

    void collect(std::size_t node, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b,
                 std::vector<LeafRun>& out) const {
        if (b < lo || hi < a) return;
        const Node& n = nodes_[node];
        if (n.full) return;
        if (n.empty) {
            emit(out, std::max(lo, a), std::min(hi, b));
            return;
        }
        std::size_t mid = lo + (hi - lo) / 2;
        collect(2 * node, lo, mid, a, b, out);
        collect(2 * node + 1, mid + 1, hi, a, b, out);
    }
};

}  // namespace rcplace

#endif  // RCPLACE_SEGMENT_TREE_HPP
