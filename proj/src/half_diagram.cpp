#include "wba/half_diagram.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "wba/errors.hpp"
#include "wba/partition.hpp"

namespace wba {

std::vector<int> HalfDiagram::free_dots(int side) const {
    std::vector<char> used(static_cast<std::size_t>(n()) + 1, 0);
    for (const auto& [a, b] : arcs) {
        used[static_cast<std::size_t>(a)] = 1;
        used[static_cast<std::size_t>(b)] = 1;
    }
    std::vector<int> out;
    const int from = side == 0 ? 1 : r + 1;
    const int to = side == 0 ? r : n();
    for (int i = from; i <= to; ++i)
        if (!used[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

bool HalfLess::operator()(const HalfDiagram& a, const HalfDiagram& b) const {
    if (a.r != b.r) return a.r < b.r;
    if (a.s != b.s) return a.s < b.s;
    return a.arcs < b.arcs;
}

HalfDiagram validate_half(int r, int s, const std::vector<std::pair<int, int>>& arcs) {
    if (r < 0 || s < 0) throw RangeError("half diagram sizes must be nonnegative");
    const int n = r + s;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> canon;
    canon.reserve(arcs.size());
    for (auto [a, b] : arcs) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw RangeError("arc endpoint out of range");
        if (a > b) std::swap(a, b);
        if (!(a <= r && b > r))
            throw WallViolation("arc (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") does not cross the wall");
        for (int dot : {a, b})
            if (used[static_cast<std::size_t>(dot)]++)
                throw NotAMatching("dot " + std::to_string(dot) + " lies on two arcs");
        canon.emplace_back(a, b);
    }
    std::sort(canon.begin(), canon.end());
    return HalfDiagram{r, s, std::move(canon)};
}

namespace {

std::vector<std::vector<int>> subsets(int from, int to, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= to; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, from);
    return out;
}

} // namespace

std::vector<HalfDiagram> enumerate_half(int r, int s, int l) {
    if (l < 0 || l > std::min(r, s))
        throw RangeError("arc count " + std::to_string(l) + " out of range for (" +
                         std::to_string(r) + ", " + std::to_string(s) + ")");
    std::vector<HalfDiagram> out;
    for (const auto& left : subsets(1, r, l))
        for (const auto& right0 : subsets(r + 1, r + s, l)) {
            std::vector<int> right = right0;
            std::sort(right.begin(), right.end());
            do {
                std::vector<std::pair<int, int>> arcs;
                for (int i = 0; i < l; ++i) arcs.emplace_back(left[i], right[i]);
                out.push_back(validate_half(r, s, arcs));
            } while (std::next_permutation(right.begin(), right.end()));
        }
    std::sort(out.begin(), out.end(), HalfLess{});
    return out;
}

unsigned long long half_dim(int r, int s, int l) {
    return binomial(r, l) * binomial(s, l) * factorial_ull(l);
}

HalfDiagram make_v0(int r, int s, int l) {
    if (l < 0 || l > std::min(r, s))
        throw RangeError("nested arc pattern needs 0 <= l <= min(r, s)");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= l; ++i) arcs.emplace_back(r - l + i, r + l + 1 - i);
    return validate_half(r, s, arcs);
}

std::optional<HalfAction> act(const WalledDiagram& x, const HalfDiagram& v) {
    if (x.r != v.r || x.s != v.s)
        throw SizeMismatch("diagram and half diagram have different (r, s)");
    const int n = x.n();

    // Nodes 0..n-1: x's top row. Nodes n..2n-1: v's dots glued to x's
    // bottom row. Every top node has degree 1; a glued node has degree 2
    // exactly when it lies on an arc of v.
    std::vector<std::array<int, 2>> adj(2 * n, {-1, -1});
    auto add_edge = [&adj](int u, int w) {
        adj[u][adj[u][0] < 0 ? 0 : 1] = w;
        adj[w][adj[w][0] < 0 ? 0 : 1] = u;
    };
    for (const auto& [a, b] : x.pairs) {
        int u = a > 0 ? a - 1 : n + (-a) - 1;
        int w = b > 0 ? b - 1 : n + (-b) - 1;
        add_edge(u, w);
    }
    for (const auto& [a, b] : v.arcs) add_edge(n + a - 1, n + b - 1);

    std::vector<char> visited(2 * n, 0);
    std::vector<std::pair<int, int>> image_arcs;
    std::vector<int> flow(static_cast<std::size_t>(n) + 1, 0);

    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        visited[start] = 1;
        int prev = -1, cur = start;
        while (true) {
            int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            visited[cur] = 1;
            if (cur < n) break;
            if (adj[cur][1] < 0) break;
        }
        if (cur < n) {
            image_arcs.emplace_back(start + 1, cur + 1);
        } else {
            // Path ends at a free dot of v; record the flow to the top.
            flow[static_cast<std::size_t>(cur - n + 1)] = start + 1;
        }
    }

    // A surviving unvisited degree-1 glued node can only pair with
    // another one: two free dots of v were joined, the result vanishes.
    for (int node = n; node < 2 * n; ++node)
        if (!visited[node] && adj[node][1] < 0) return std::nullopt;

    long loops = 0;
    for (int node = n; node < 2 * n; ++node) {
        if (visited[node]) continue;
        ++loops;
        int prev = -1, cur = node;
        while (!visited[cur]) {
            visited[cur] = 1;
            int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
    }

    HalfDiagram image = validate_half(v.r, v.s, image_arcs);

    HalfAction result;
    result.loops = loops;
    result.image = image;
    for (int side = 0; side < 2; ++side) {
        std::vector<int> v_free = v.free_dots(side);
        std::vector<int> img_free = image.free_dots(side);
        std::vector<int>& map = side == 0 ? result.left_map : result.right_map;
        map.resize(v_free.size());
        for (std::size_t i = 0; i < v_free.size(); ++i) {
            int top = flow[static_cast<std::size_t>(v_free[i])];
            auto it = std::lower_bound(img_free.begin(), img_free.end(), top);
            if (it == img_free.end() || *it != top)
                throw WallViolation("free dot changed sides while tracing strands");
            map[i] = static_cast<int>(it - img_free.begin());
        }
    }
    return result;
}

AlgebraElement make_idempotent(int r, int s, int l) {
    HalfDiagram pattern = make_v0(r, s, l);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [a, b] : pattern.arcs) {
        pairs.emplace_back(a, b);
        pairs.emplace_back(-a, -b);
    }
    for (int side = 0; side < 2; ++side)
        for (int dot : pattern.free_dots(side)) pairs.emplace_back(dot, -dot);
    WalledDiagram d = validate(r, s, pairs);
    return to_element(d, Laurent::delta_power(-l));
}

} // namespace wba
