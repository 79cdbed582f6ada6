#include "painleve/catalog/spectral_type.hpp"

#include <algorithm>
#include <sstream>

namespace painleve {

namespace {

struct Node {
    int part = 0;  // leaf value when kids empty
    std::vector<Node> kids;

    bool leaf() const { return kids.empty(); }
    long sum() const {
        if (leaf()) return part;
        long s = 0;
        for (const auto& k : kids) s += k.sum();
        return s;
    }
    int depth() const {
        if (leaf()) return 0;
        int d = 0;
        for (const auto& k : kids) d = std::max(d, k.depth());
        return d + 1;
    }
    void leaves(std::vector<int>& out) const {
        if (leaf()) {
            out.push_back(part);
            return;
        }
        for (const auto& k : kids) k.leaves(out);
    }
    // subtree sums after descending k levels (leaves stop early)
    void collect(int k, std::vector<int>& out) const {
        if (k <= 0 || leaf()) {
            out.push_back(static_cast<int>(sum()));
            return;
        }
        for (const auto& kid : kids) kid.collect(k - 1, out);
    }
};

// Recursive descent over one spectral-type string.  Grammar:
//   type      := point (',' point)*
//   point     := group+
//   group     := digit | '(' group+ ')' subscript?
//   subscript := '_' digit | '_' '{' digits '}'
// Parts are single digits, matching the source notation.
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char take() { return s[pos++]; }
    bool done() const { return pos >= s.size(); }

    Node nest() {
        if (isdigit(peek())) {
            Node n;
            n.part = take() - '0';
            if (n.part == 0) throw ParseError("zero part", pos - 1);
            return n;
        }
        if (peek() != '(') throw ParseError("expected digit or '('", pos);
        take();
        Node n;
        int depth = -1;
        while (peek() != ')') {
            if (done()) throw ParseError("unbalanced parenthesis", pos);
            Node kid = nest();
            int d = kid.depth();
            if (depth == -1) depth = d;
            if (d != depth)
                throw RefinementError("uneven nesting depth inside a group in \"" + s + "\"");
            n.kids.push_back(std::move(kid));
        }
        take();  // ')'
        if (n.kids.empty()) throw ParseError("empty group", pos);
        return n;
    }

    long subscript() {
        take();  // '_'
        if (peek() == '{') {
            take();
            long v = 0;
            while (isdigit(peek())) v = v * 10 + (take() - '0');
            if (peek() != '}') throw ParseError("expected '}'", pos);
            take();
            return v;
        }
        if (!isdigit(peek())) throw ParseError("expected subscript digit", pos);
        return take() - '0';
    }

    SpectralGroup group(std::vector<Node>& trees) {
        Node n = nest();
        SpectralGroup g;
        g.depth = n.depth();
        n.leaves(g.innermost);
        if (peek() == '_') {
            if (g.depth == 0) throw ParseError("subscript on a bare part", pos);
            g.ramification = subscript();
            if (g.ramification < 2) throw ParseError("ramification index must be >= 2", pos);
        }
        trees.push_back(std::move(n));
        return g;
    }
};

}  // namespace

int LocalType::depth() const {
    int d = 0;
    for (const auto& g : groups) d = std::max(d, g.depth);
    return d;
}

long LocalType::ramification() const {
    long q = 1;
    for (const auto& g : groups) q = std::max(q, g.ramification);
    return q;
}

long LocalType::size() const {
    long s = 0;
    for (const auto& g : groups) s += g.size();
    return s;
}

SpectralType parse_spectral_type(const std::string& s) {
    SpectralType t;
    t.source = s;
    Parser p(s);
    std::vector<std::vector<Node>> trees;
    while (true) {
        LocalType pt;
        std::vector<Node> point_trees;
        while (!p.done() && p.peek() != ',') pt.groups.push_back(p.group(point_trees));
        if (pt.groups.empty()) throw ParseError("empty local type", p.pos);
        t.points.push_back(std::move(pt));
        trees.push_back(std::move(point_trees));
        if (p.done()) break;
        p.take();  // ','
        if (p.done()) throw ParseError("trailing comma", p.pos);
    }
    // level partitions per point, coarsest first; shallow groups ride along whole
    for (size_t pi = 0; pi < t.points.size(); ++pi) {
        LocalType& pt = t.points[pi];
        int D = pt.depth();
        for (int lvl = D; lvl >= 0; --lvl) {
            std::vector<int> row;
            for (size_t gi = 0; gi < pt.groups.size(); ++gi) {
                int descend = std::max(0, pt.groups[gi].depth - lvl);
                trees[pi][gi].collect(descend, row);
            }
            pt.levels.push_back(std::move(row));
        }
        for (size_t r = 0; r + 1 < pt.levels.size(); ++r) {
            long s1 = 0, s2 = 0;
            for (int v : pt.levels[r]) s1 += v;
            for (int v : pt.levels[r + 1]) s2 += v;
            if (s1 != s2 || pt.levels[r].size() > pt.levels[r + 1].size())
                throw RefinementError("level " + std::to_string(r) +
                                      " fails the coarsening check in \"" + s + "\"");
        }
    }
    t.matrix_size = t.points.front().size();
    for (const auto& pt : t.points)
        if (pt.size() != t.matrix_size)
            throw SizeMismatch("points describe different matrix sizes in \"" + s + "\"");
    return t;
}

std::vector<Rational> singularity_pattern(const SpectralType& t) {
    std::vector<Rational> out;
    for (const auto& pt : t.points) {
        Rational v(pt.depth(), pt.ramification());
        v.canonicalize();
        out.push_back(v + 1);
    }
    return out;
}

std::string pattern_string(const std::vector<Rational>& pattern) {
    std::vector<Rational> sorted = pattern;
    std::sort(sorted.begin(), sorted.end(), [](const Rational& a, const Rational& b) { return a > b; });
    std::ostringstream os;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << "+";
        os << rat_to_string(sorted[i]);
    }
    return os.str();
}

}  // namespace painleve
