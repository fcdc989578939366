#pragma once

#include <algorithm>
#include <charconv>
#include <ostream>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcreal/common.hpp"

namespace tcreal {

// Multiset of non-negative degrees kept as a list of (value, count) buckets
// ordered by decreasing value. Index arithmetic follows the sorted
// non-increasing order, 0-based.
class DegreeSequence {
public:
    DegreeSequence() = default;

    explicit DegreeSequence(const std::vector<std::uint32_t>& values) {
        for (auto v : values) add(v);
    }

    DegreeSequence(std::initializer_list<std::uint32_t> values) {
        for (auto v : values) add(v);
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::uint64_t sum() const { return sum_; }

    std::uint32_t max() const {
        if (empty()) throw precondition_error("max of empty sequence");
        return head_;
    }

    std::uint32_t min() const {
        if (empty()) throw precondition_error("min of empty sequence");
        return tail_;
    }

    std::uint32_t count(std::uint32_t value) const {
        return value < slots_.size() ? slots_[value].count : 0;
    }

    // Entry at sorted position i. Walks buckets from the nearer end.
    std::uint32_t at(std::size_t i) const {
        if (i >= size_) throw precondition_error("sequence index out of range");
        if (i < size_ / 2) {
            std::size_t seen = 0;
            for (auto v = head_;; v = slots_[v].next) {
                seen += slots_[v].count;
                if (i < seen) return v;
            }
        }
        std::size_t from_back = size_ - 1 - i;
        std::size_t seen = 0;
        for (auto v = tail_;; v = slots_[v].prev) {
            seen += slots_[v].count;
            if (from_back < seen) return v;
        }
    }

    void add(std::uint32_t value, std::uint32_t times = 1) {
        if (times == 0) return;
        if (value >= slots_.size()) slots_.resize(std::size_t(value) + 1);
        auto& s = slots_[value];
        if (s.count == 0) link(value);
        s.count += times;
        size_ += times;
        sum_ += std::uint64_t(value) * times;
    }

    void remove(std::uint32_t value, std::uint32_t times = 1) {
        if (times == 0) return;
        if (count(value) < times) throw precondition_error("value not present in sequence");
        auto& s = slots_[value];
        s.count -= times;
        if (s.count == 0) unlink(value);
        size_ -= times;
        sum_ -= std::uint64_t(value) * times;
    }

    void decrement(std::uint32_t value, std::uint32_t times = 1) {
        if (value == 0) throw precondition_error("cannot decrement a zero entry");
        if (count(value) < times) throw precondition_error("value not present in sequence");
        if (times == 0) return;
        auto& below = slots_[value - 1];
        if (below.count == 0) link_after(value - 1, value);
        below.count += times;
        size_ += times;
        sum_ += std::uint64_t(value - 1) * times;
        remove(value, times);
    }

    // Removes the last entry and decrements the first d_n remaining entries.
    // Returns the decremented values after the step, largest first.
    std::vector<std::uint32_t> lay_off_last() { return lay_off_value(min()); }

    // Removes one entry equal to value and decrements the first value entries
    // of the rest. Returns the new values of the touched entries, largest first.
    std::vector<std::uint32_t> lay_off_value(std::uint32_t value) {
        remove(value);
        if (value > size_) {
            add(value);
            throw precondition_error("entry larger than remaining vertex count");
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> plan;
        std::uint32_t left = value;
        for (auto v = head_; left > 0; v = slots_[v].next) {
            auto take = std::min(left, slots_[v].count);
            plan.emplace_back(v, take);
            left -= take;
        }
        if (!plan.empty() && plan.back().first == 0) {
            add(value);
            throw precondition_error("lay-off would create a negative degree");
        }
        std::vector<std::uint32_t> out;
        out.reserve(value);
        for (auto it = plan.rbegin(); it != plan.rend(); ++it) decrement(it->first, it->second);
        for (auto [v, c] : plan) out.insert(out.end(), c, v - 1);
        return out;
    }

    std::vector<std::uint32_t> entries() const {
        std::vector<std::uint32_t> out;
        out.reserve(size_);
        for (auto v = head_; size_ > 0; v = slots_[v].next) {
            out.insert(out.end(), slots_[v].count, v);
            if (v == tail_) break;
        }
        return out;
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> buckets() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (auto v = head_; size_ > 0; v = slots_[v].next) {
            out.emplace_back(v, slots_[v].count);
            if (v == tail_) break;
        }
        return out;
    }

    friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
        return a.size_ == b.size_ && a.sum_ == b.sum_ && a.buckets() == b.buckets();
    }

private:
    struct Slot {
        std::uint32_t count = 0;
        std::uint32_t prev = npos;  // next larger non-empty value
        std::uint32_t next = npos;  // next smaller non-empty value
    };

    void link(std::uint32_t value) {
        if (size_ == 0) {
            head_ = tail_ = value;
            slots_[value].prev = slots_[value].next = npos;
            return;
        }
        if (value > head_) {
            slots_[value].prev = npos;
            slots_[value].next = head_;
            slots_[head_].prev = value;
            head_ = value;
            return;
        }
        if (value < tail_) {
            link_after(value, tail_);
            return;
        }
        // Interior insertion scans upward to the nearest non-empty value.
        std::uint32_t above = value + 1;
        while (slots_[above].count == 0) ++above;
        link_after(value, above);
    }

    void link_after(std::uint32_t value, std::uint32_t above) {
        std::uint32_t below = slots_[above].next;
        slots_[value].prev = above;
        slots_[value].next = below;
        slots_[above].next = value;
        if (below == npos) tail_ = value;
        else slots_[below].prev = value;
    }

    void unlink(std::uint32_t value) {
        auto& s = slots_[value];
        if (s.prev == npos) head_ = s.next;
        else slots_[s.prev].next = s.next;
        if (s.next == npos) tail_ = s.prev;
        else slots_[s.next].prev = s.prev;
        s.prev = s.next = npos;
    }

    std::vector<Slot> slots_;
    std::uint32_t head_ = npos;
    std::uint32_t tail_ = npos;
    std::size_t size_ = 0;
    std::uint64_t sum_ = 0;
};

inline std::string to_string(const DegreeSequence& d) {
    std::string out = "(";
    bool first = true;
    for (auto v : d.entries()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + ")";
}

// Erdos-Gallai in O(n) via prefix sums and a pointer over the sorted entries.
inline std::ostream& operator<<(std::ostream& out, const DegreeSequence& d) { return out << to_string(d); }

inline bool is_graphical(const DegreeSequence& d) {
    if (d.sum() % 2 != 0) return false;
    const auto e = d.entries();
    const std::size_t n = e.size();
    if (n == 0) return true;
    if (e[0] > n - 1) return false;
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + e[i];
    // w = number of entries >= r; non-increasing as r grows.
    std::size_t w = n;
    for (std::size_t r = 1; r <= n; ++r) {
        while (w > 0 && e[w - 1] < r) --w;
        std::size_t split = std::max(w, r);
        std::uint64_t rhs = std::uint64_t(r) * (r - 1);
        if (w > r) rhs += std::uint64_t(w - r) * r;
        rhs += prefix[n] - prefix[split];
        if (prefix[r] > rhs) return false;
    }
    return true;
}

inline bool is_multigraphical(const DegreeSequence& d) {
    if (d.sum() % 2 != 0) return false;
    if (d.empty()) return true;
    return d.max() <= d.sum() - d.max();
}

inline bool is_realizable(const DegreeSequence& d, GraphMode mode) {
    return mode == GraphMode::simple ? is_graphical(d) : is_multigraphical(d);
}

// Residual after connecting the vertex at 1-based position i to the first
// d_i other entries.
inline DegreeSequence lay_off_graphical(DegreeSequence d, std::size_t i) {
    if (i < 1 || i > d.size()) throw precondition_error("lay-off index out of range");
    d.lay_off_value(d.at(i - 1));
    return d;
}

// Residual after removing one edge between 1-based positions 1 and j.
inline DegreeSequence lay_off_multigraphical(DegreeSequence d, std::size_t j) {
    if (j < 2 || j > d.size()) throw precondition_error("lay-off index out of range");
    auto a = d.at(0);
    auto b = d.at(j - 1);
    if (b == 0) throw precondition_error("lay-off needs a positive partner entry");
    d.remove(a);
    d.remove(b);
    d.add(a - 1);
    d.add(b - 1);
    return d;
}

// Integers separated by whitespace and/or commas.
inline DegreeSequence parse_degree_sequence(std::string_view text) {
    std::vector<std::uint32_t> values;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc() || ptr == text.data() + i) {
            throw precondition_error("malformed degree sequence near: " + std::string(text.substr(i, 12)));
        }
        std::size_t next = std::size_t(ptr - text.data());
        if (next < text.size()) {
            char t = text[next];
            if (t != ' ' && t != '\t' && t != ',' && t != '\r' && t != '\n') {
                throw precondition_error("malformed degree sequence near: " + std::string(text.substr(i, 12)));
            }
        }
        values.push_back(v);
        i = next;
    }
    return DegreeSequence(values);
}

}  // namespace tcreal
