#include "hvo/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace hvo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must not increase");
        size_ += parts_[k];
    }
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(size_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
    return out;
}

Partition Partition::transpose() const {
    std::vector<int> t(static_cast<size_t>(part(1)), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    return Partition(std::move(t));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s;
}

Partition Partition::parse(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ') t.push_back(ch);
    if (t.empty() || t == "-") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t next = t.find(',', pos);
        if (next == std::string::npos) next = t.size();
        std::string tok = t.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition: " + std::string(s));
        parts.push_back(std::stoi(tok));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    return parts_ <=> o.parts_;
}

int arm(const Partition& lam, const Cell& c) { return lam.part(c.i) - c.j; }

int leg(const Partition& lam, const Cell& c) {
    int col = 0;
    for (int p : lam.parts()) {
        if (p >= c.j)
            ++col;
        else
            break;
    }
    return col - c.i;
}

int hook(const Partition& mu, const Cell& c) {
    if (!mu.contains(c)) throw std::invalid_argument("hook of a cell outside the diagram");
    return arm(mu, c) + leg(mu, c) + 1;
}

std::vector<int> hooks(const Partition& mu) {
    std::vector<int> h;
    for (const Cell& c : mu.cells()) h.push_back(hook(mu, c));
    return h;
}

std::vector<Partition> enumerate(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long long partition_count(int n) {
    std::vector<long long> p(static_cast<size_t>(n + 1), 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int s = k; s <= n; ++s) p[static_cast<size_t>(s)] += p[static_cast<size_t>(s - k)];
    return p[static_cast<size_t>(n)];
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

// ---------------------------------------------------------------- blending
//
// Index set S(mu) = {mu_j - j + 1}. Even elements 2x+2 carry the first
// component with charge b, odd elements 2y+1 the second with charge -b:
//   x_j = mu1_j - j + b,  y_j = mu2_j - j - b.

namespace {

// Descending elements of a Maya set given as the first entries of a sequence
// that is dense below its last element.
Partition from_maya(const std::vector<int>& desc, int charge) {
    std::vector<int> parts;
    for (size_t k = 0; k < desc.size(); ++k) {
        int j = static_cast<int>(k) + 1;
        int p = desc[k] + j - charge;
        if (p < 0) throw std::logic_error("inconsistent Maya set");
        parts.push_back(p);
    }
    return Partition(std::move(parts));
}

} // namespace

Partition blend(int b, const Partition& mu1, const Partition& mu2) {
    const int tail = 2 * (mu1.size() + mu2.size()) + 4 * std::abs(b) + 8;
    std::set<int, std::greater<int>> s;
    for (int j = 1; j <= tail; ++j) {
        s.insert(2 * (mu1.part(j) - j + b) + 2);
        s.insert(2 * (mu2.part(j) - j - b) + 1);
    }
    // Above this threshold both classes are listed completely.
    const int floor = std::max(2 * (b - tail) + 2, 2 * (-b - tail) + 1);
    std::vector<int> parts;
    int j = 1;
    for (int v : s) {
        if (v <= floor) break;
        parts.push_back(v + j - 1);
        ++j;
    }
    return Partition(std::move(parts));
}

Blend unblend(const Partition& mu) {
    const int lo = -mu.length() - 3;  // everything below lo lies in S(mu)
    std::vector<int> evens, odds;
    std::set<int> s;
    for (int j = 1; mu.part(j) - j + 1 >= lo || j <= mu.length(); ++j) s.insert(mu.part(j) - j + 1);
    int even_occ = 0, even_holes = 0;
    for (int v = mu.part(1) + 1; v >= lo; --v) {
        bool in = s.count(v) > 0;
        bool even = (v % 2 == 0);
        if (in) (even ? evens : odds).push_back(v);
        if (even && in && v >= 2) ++even_occ;
        if (even && !in && v <= 0) ++even_holes;
    }
    Blend out;
    out.b = even_occ - even_holes;
    std::vector<int> xs, ys;
    for (int v : evens) xs.push_back((v - 2) / 2);
    for (int v : odds) ys.push_back((v - 1) / 2);
    out.mu1 = from_maya(xs, out.b);
    out.mu2 = from_maya(ys, -out.b);
    return out;
}

Partition nu(int b) {
    std::vector<int> parts;
    int top = b >= 0 ? 2 * b : -2 * b - 1;
    for (int k = top; k >= 1; --k) parts.push_back(k);
    return Partition(std::move(parts));
}

} // namespace hvo
