#include "gda/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gda {
namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw FormatError(msg);
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::vector<Elem>> empty_rows(int k) {
    return std::vector<std::vector<Elem>>(k, std::vector<Elem>(k, 0));
}

}  // namespace

void GroupTable::finalize() {
    inverse_.assign(k_, -1);
    for (Elem u = 0; u < k_; ++u) {
        for (Elem v = 0; v < k_; ++v) {
            if (mul(u, v) == identity && mul(v, u) == identity) {
                inverse_[u] = v;
                break;
            }
        }
    }

    abelian_ = true;
    for (Elem u = 0; u < k_ && abelian_; ++u)
        for (Elem v = u + 1; v < k_; ++v)
            if (mul(u, v) != mul(v, u)) {
                abelian_ = false;
                break;
            }

    // commutator subgroup: close {u^-1 v^-1 u v} under multiplication
    std::vector<char> in(k_, 0);
    std::vector<Elem> todo;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            todo.push_back(x);
        }
    };
    push(identity);
    for (Elem u = 0; u < k_; ++u)
        for (Elem v = 0; v < k_; ++v)
            push(mul(mul(inverse_[u], inverse_[v]), mul(u, v)));
    for (size_t i = 0; i < todo.size(); ++i)
        for (size_t j = 0; j < todo.size(); ++j)
            push(mul(todo[i], todo[j]));
    commutator_.clear();
    for (Elem u = 0; u < k_; ++u)
        if (in[u]) commutator_.push_back(u);
    in_commutator_ = std::move(in);
}

GroupTable GroupTable::from_rows(std::vector<std::vector<Elem>> rows) {
    const int k = static_cast<int>(rows.size());
    require(k >= 1, "group table: empty table");
    require(k <= limits::kMaxGroupOrder, "group table: order exceeds cap");
    for (int u = 0; u < k; ++u) {
        require(static_cast<int>(rows[u].size()) == k, "group table: row " + std::to_string(u) + " has wrong length");
        for (int v = 0; v < k; ++v)
            require(rows[u][v] >= 0 && rows[u][v] < k,
                    "group table: entry out of range at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    // identity axiom: element 0
    for (int u = 0; u < k; ++u)
        require(rows[0][u] == u && rows[u][0] == u,
                "group table: element 0 is not an identity, witness (0," + std::to_string(u) + ")");
    // each row and column is a permutation
    for (int u = 0; u < k; ++u) {
        std::vector<char> seen_row(k, 0), seen_col(k, 0);
        for (int v = 0; v < k; ++v) {
            require(!seen_row[rows[u][v]],
                    "group table: row " + std::to_string(u) + " repeats value, witness (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
            seen_row[rows[u][v]] = 1;
            require(!seen_col[rows[v][u]],
                    "group table: column " + std::to_string(u) + " repeats value, witness (" + std::to_string(v) +
                        "," + std::to_string(u) + ")");
            seen_col[rows[v][u]] = 1;
        }
    }
    // inverses
    for (int u = 0; u < k; ++u) {
        bool found = false;
        for (int v = 0; v < k && !found; ++v)
            found = rows[u][v] == 0 && rows[v][u] == 0;
        require(found, "group table: element " + std::to_string(u) + " has no two-sided inverse");
    }
    // associativity, O(k^3)
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            for (int w = 0; w < k; ++w)
                require(rows[rows[u][v]][w] == rows[u][rows[v][w]],
                        "group table: associativity fails, witness (" + std::to_string(u) + "," + std::to_string(v) +
                            "," + std::to_string(w) + ")");

    GroupTable g;
    g.k_ = k;
    g.table_.reserve(static_cast<size_t>(k) * k);
    for (auto& row : rows) g.table_.insert(g.table_.end(), row.begin(), row.end());
    g.finalize();
    return g;
}

GroupTable GroupTable::cyclic(int n) {
    if (n < 1 || n > limits::kMaxGroupOrder) throw PreconditionError("cyclic: order out of range");
    auto rows = empty_rows(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
    return from_rows(std::move(rows));
}

GroupTable GroupTable::elementary_abelian(int p, int exponent) {
    if (!is_prime(p)) throw PreconditionError("elab: base must be prime");
    if (exponent < 1) throw PreconditionError("elab: exponent must be positive");
    long long k = 1;
    for (int i = 0; i < exponent; ++i) {
        k *= p;
        if (k > limits::kMaxGroupOrder) throw PreconditionError("elab: order exceeds cap");
    }
    const int n = static_cast<int>(k);
    auto rows = empty_rows(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = a, y = b, s = 0, mult = 1;
            for (int i = 0; i < exponent; ++i) {
                s += ((x % p + y % p) % p) * mult;
                x /= p;
                y /= p;
                mult *= p;
            }
            rows[a][b] = s;
        }
    return from_rows(std::move(rows));
}

GroupTable GroupTable::dihedral(int n) {
    if (n < 1 || 2 * n > limits::kMaxGroupOrder) throw PreconditionError("dihedral: order out of range");
    // index = a + n*b for r^a s^b;  s r = r^-1 s
    const int k = 2 * n;
    auto rows = empty_rows(k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            int a = x % n, b = x / n, c = y % n, d = y / n;
            int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
            rows[x][y] = rot + n * ((b + d) % 2);
        }
    return from_rows(std::move(rows));
}

GroupTable GroupTable::symmetric(int n) {
    if (n < 1) throw PreconditionError("symmetric: n must be positive");
    if (n > limits::kMaxSymmetricN) throw PreconditionError("symmetric: n capped at " + std::to_string(limits::kMaxSymmetricN));
    std::vector<int> one_line(n);
    std::iota(one_line.begin(), one_line.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(one_line);
    } while (std::next_permutation(one_line.begin(), one_line.end()));
    const int k = static_cast<int>(perms.size());
    auto rank_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    auto rows = empty_rows(k);
    std::vector<int> prod(n);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];  // (ab)(x) = a(b(x))
            rows[a][b] = rank_of(prod);
        }
    return from_rows(std::move(rows));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    long long k = static_cast<long long>(a.order()) * b.order();
    if (k > limits::kMaxGroupOrder) throw PreconditionError("product: order exceeds cap");
    const int ka = a.order(), kb = b.order(), n = static_cast<int>(k);
    auto rows = empty_rows(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rows[x][y] = a.mul(x / kb, y / kb) * kb + b.mul(x % kb, y % kb);
    (void)ka;
    return from_rows(std::move(rows));
}

int GroupTable::element_order(Elem u) const {
    int ord = 1;
    Elem p = u;
    while (p != identity) {
        p = mul(p, u);
        ++ord;
    }
    return ord;
}

std::vector<Elem> GroupTable::centralizer(Elem u) const {
    std::vector<Elem> out;
    for (Elem v = 0; v < k_; ++v)
        if (mul(u, v) == mul(v, u)) out.push_back(v);
    return out;
}

int GroupTable::exponent() const {
    long long e = 1;
    for (Elem u = 0; u < k_; ++u) e = std::lcm(e, static_cast<long long>(element_order(u)));
    return static_cast<int>(e);
}

std::vector<std::pair<Elem, int>> GroupTable::abelian_basis() const {
    if (!abelian_) throw PreconditionError("abelian_basis: group is not abelian");
    if (k_ == 1) return {};

    // g1 = element of maximal order (= exponent); recurse on T/<g1> and lift.
    Elem g1 = 1;
    int d1 = element_order(1);
    for (Elem u = 2; u < k_; ++u) {
        int d = element_order(u);
        if (d > d1) {
            d1 = d;
            g1 = u;
        }
    }
    // cosets of <g1>
    std::vector<char> in_g1(k_, 0);
    {
        Elem p = identity;
        do {
            in_g1[p] = 1;
            p = mul(p, g1);
        } while (p != identity);
    }
    std::vector<Elem> coset_rep(k_, -1);  // element -> minimal rep of its coset
    std::vector<Elem> reps;
    for (Elem u = 0; u < k_; ++u) {
        if (coset_rep[u] != -1) continue;
        reps.push_back(u);
        Elem p = identity;
        do {
            coset_rep[mul(u, p)] = u;
            p = mul(p, g1);
        } while (p != identity);
    }
    std::sort(reps.begin(), reps.end());
    const int q = static_cast<int>(reps.size());
    std::vector<int> rep_index(k_, -1);
    for (int i = 0; i < q; ++i) rep_index[reps[i]] = i;

    std::vector<std::vector<Elem>> qrows(q, std::vector<Elem>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) qrows[i][j] = rep_index[coset_rep[mul(reps[i], reps[j])]];
    GroupTable quotient = from_rows(std::move(qrows));

    std::vector<std::pair<Elem, int>> basis{{g1, d1}};
    for (auto [hq, m] : quotient.abelian_basis()) {
        Elem h = reps[hq];
        // h^m lies in <g1>; adjust by g1^{-t/m} so the lift has order m
        Elem hm = identity;
        for (int i = 0; i < m; ++i) hm = mul(hm, h);
        int t = 0;
        {
            Elem p = identity;
            while (p != hm) {
                p = mul(p, g1);
                ++t;
            }
        }
        Elem adj = h;
        int steps = ((-(t / m)) % d1 + d1) % d1;
        for (int i = 0; i < steps; ++i) adj = mul(adj, g1);
        basis.emplace_back(adj, m);
    }
    return basis;
}

std::vector<int> GroupTable::abelian_coordinates(Elem u, const std::vector<std::pair<Elem, int>>& basis) const {
    // dense enumeration of all coordinate tuples; k <= cap keeps this cheap
    std::vector<int> radices(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) radices[i] = basis[i].second;
    std::vector<int> coord(basis.size(), 0);
    Elem cur = identity;
    // iterate mixed-radix counter alongside the group element it denotes
    long long total = 1;
    for (int r : radices) total *= r;
    for (long long step = 0; step < total; ++step) {
        if (cur == u) return coord;
        // increment
        size_t i = 0;
        while (i < coord.size()) {
            coord[i]++;
            cur = mul(cur, basis[i].first);
            if (coord[i] < radices[i]) break;
            // wrap: multiplying by g^order returned to the same value
            coord[i] = 0;
            ++i;
        }
        if (i == coord.size()) break;
        // wrapping lower digits already reset cur correctly because g^order = 1
    }
    if (cur == u) return coord;
    throw PreconditionError("abelian_coordinates: basis does not span group");
}

namespace {

// recursive-descent spec parser; product:A,B nests by greedy consumption
GroupTable parse_spec(const std::string& s, size_t& pos);

long parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw PreconditionError("group spec: expected integer in '" + s + "'");
    return std::stol(s.substr(start, pos - start));
}

void expect(const std::string& s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw PreconditionError(std::string("group spec: expected '") + c + "' in '" + s + "'");
    ++pos;
}

GroupTable parse_spec(const std::string& s, size_t& pos) {
    auto starts_with = [&](const char* kw) {
        size_t len = std::strlen(kw);
        return s.compare(pos, len, kw) == 0;
    };
    if (starts_with("cyclic:")) {
        pos += 7;
        return GroupTable::cyclic(static_cast<int>(parse_int(s, pos)));
    }
    if (starts_with("elab:")) {
        pos += 5;
        int p = static_cast<int>(parse_int(s, pos));
        expect(s, pos, '^');
        int e = static_cast<int>(parse_int(s, pos));
        return GroupTable::elementary_abelian(p, e);
    }
    if (starts_with("dihedral:")) {
        pos += 9;
        return GroupTable::dihedral(static_cast<int>(parse_int(s, pos)));
    }
    if (starts_with("symmetric:")) {
        pos += 10;
        return GroupTable::symmetric(static_cast<int>(parse_int(s, pos)));
    }
    if (starts_with("product:")) {
        pos += 8;
        GroupTable a = parse_spec(s, pos);
        expect(s, pos, ',');
        GroupTable b = parse_spec(s, pos);
        return GroupTable::direct_product(a, b);
    }
    if (starts_with("table:")) {
        pos += 6;
        std::string path = s.substr(pos);
        pos = s.size();
        std::ifstream in(path);
        if (!in) throw FormatError("group spec: cannot open '" + path + "'");
        return read_group_table(in);
    }
    throw PreconditionError("group spec: unknown constructor in '" + s + "'");
}

}  // namespace

GroupTable build_group(const std::string& spec) {
    size_t pos = 0;
    GroupTable g = parse_spec(spec, pos);
    if (pos != spec.size()) throw PreconditionError("group spec: trailing characters in '" + spec + "'");
    return g;
}

GroupRef build_group_ref(const std::string& spec) {
    return std::make_shared<const GroupTable>(build_group(spec));
}

GroupTable read_group_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != "group-table v1")
        throw FormatError("group table: missing 'group-table v1' header");
    std::string word;
    long k = 0;
    if (!(in >> word) || word != "order" || !(in >> k) || k < 1)
        throw FormatError("group table: expected 'order <k>'");
    if (k > limits::kMaxGroupOrder) throw FormatError("group table: order exceeds cap");
    std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
    for (long u = 0; u < k; ++u)
        for (long v = 0; v < k; ++v) {
            long x;
            if (!(in >> x)) throw FormatError("group table: truncated at row " + std::to_string(u));
            if (x < 0 || x >= k)
                throw FormatError("group table: entry out of range at (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
            rows[u][v] = static_cast<Elem>(x);
        }
    return GroupTable::from_rows(std::move(rows));
}

void write_group_table(std::ostream& out, const GroupTable& g) {
    out << "group-table v1\n";
    out << "order " << g.order() << "\n";
    for (Elem u = 0; u < g.order(); ++u) {
        for (Elem v = 0; v < g.order(); ++v) {
            if (v) out << ' ';
            out << g.mul(u, v);
        }
        out << '\n';
    }
}

GroupMap check_antiautomorphism(const GroupTable& g, const std::vector<Elem>& image) {
    const int k = g.order();
    if (static_cast<int>(image.size()) != k) throw PreconditionError("group map: image has wrong length");
    for (Elem x : image)
        if (x < 0 || x >= k) throw PreconditionError("group map: image entry out of range");

    GroupMap m;
    m.image = image;
    std::vector<char> seen(k, 0);
    for (Elem x : image) {
        if (seen[x]) {
            m.kind = MapKind::neither;
            m.reason = "not a bijection";
            return m;
        }
        seen[x] = 1;
    }
    bool hom = true, antihom = true;
    for (Elem u = 0; u < k && (hom || antihom); ++u)
        for (Elem v = 0; v < k && (hom || antihom); ++v) {
            Elem lhs = image[g.mul(u, v)];
            if (lhs != g.mul(image[u], image[v])) hom = false;
            if (lhs != g.mul(image[v], image[u])) antihom = false;
        }
    if (!hom && !antihom) {
        m.kind = MapKind::neither;
        m.reason = "respects neither product law";
        return m;
    }
    m.kind = antihom ? MapKind::antiautomorphism : MapKind::automorphism;
    m.also_automorphism = hom && antihom;

    // order = lcm of cycle lengths
    long long ord = 1;
    std::vector<char> visited(k, 0);
    for (Elem s = 0; s < k; ++s) {
        if (visited[s]) continue;
        int len = 0;
        Elem x = s;
        while (!visited[x]) {
            visited[x] = 1;
            x = image[x];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    m.order = static_cast<int>(ord);
    return m;
}

GroupMap inversion_map(const GroupTable& g) {
    std::vector<Elem> image(g.order());
    for (Elem u = 0; u < g.order(); ++u) image[u] = g.inverse(u);
    return check_antiautomorphism(g, image);
}

GroupMap identity_automorphism(const GroupTable& g) {
    std::vector<Elem> image(g.order());
    std::iota(image.begin(), image.end(), 0);
    return check_antiautomorphism(g, image);
}

GroupMap compose_maps(const GroupTable& g, const GroupMap& outer, const GroupMap& inner) {
    if (outer.kind == MapKind::neither || inner.kind == MapKind::neither)
        throw PreconditionError("compose_maps: operands must be (anti)automorphisms");
    std::vector<Elem> image(g.order());
    for (Elem u = 0; u < g.order(); ++u) image[u] = outer.image[inner.image[u]];
    return check_antiautomorphism(g, image);
}

}  // namespace gda
