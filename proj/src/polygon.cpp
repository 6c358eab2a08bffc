#include "ffext/polygon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ffext {

namespace {

std::int64_t checked_rank(const std::vector<Block>& blocks) {
    std::int64_t n = 0;
    for (const auto& b : blocks) {
        if (b.multiplicity < 1) throw std::invalid_argument("HNPolygon: multiplicity must be >= 1");
        n += b.multiplicity;
    }
    return n;
}

}  // namespace

HNPolygon::HNPolygon(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    rank_ = checked_rank(blocks_);
    for (std::size_t i = 1; i < blocks_.size(); ++i) {
        if (!(blocks_[i].slope < blocks_[i - 1].slope))
            throw std::invalid_argument("HNPolygon: slopes must be strictly decreasing");
    }
}

HNPolygon HNPolygon::constant(const Rational& slope, std::int64_t multiplicity) {
    if (multiplicity == 0) return HNPolygon();
    return HNPolygon({Block{slope, multiplicity}});
}

HNPolygon HNPolygon::from_coordinates(std::span<const Rational> coords) {
    std::vector<Block> blocks;
    for (const auto& s : coords) {
        if (!blocks.empty() && blocks.back().slope == s) {
            ++blocks.back().multiplicity;
        } else {
            if (!blocks.empty() && blocks.back().slope < s)
                throw std::invalid_argument("HNPolygon: coordinates must be weakly decreasing");
            blocks.push_back(Block{s, 1});
        }
    }
    return HNPolygon(std::move(blocks));
}

Rational HNPolygon::degree() const {
    Rational d;
    for (const auto& b : blocks_) d += b.slope * Rational(b.multiplicity);
    return d;
}

bool HNPolygon::is_integral() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.slope.is_integer(); });
}

Rational HNPolygon::max_slope() const {
    if (empty()) throw std::invalid_argument("HNPolygon: empty polygon has no slopes");
    return blocks_.front().slope;
}

Rational HNPolygon::min_slope() const {
    if (empty()) throw std::invalid_argument("HNPolygon: empty polygon has no slopes");
    return blocks_.back().slope;
}

Rational HNPolygon::coordinate(std::int64_t i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("HNPolygon: coordinate index");
    for (const auto& b : blocks_) {
        if (i <= b.multiplicity) return b.slope;
        i -= b.multiplicity;
    }
    throw std::logic_error("HNPolygon: unreachable");
}

std::vector<Rational> HNPolygon::coordinates() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(rank_));
    for (const auto& b : blocks_)
        for (std::int64_t i = 0; i < b.multiplicity; ++i) out.push_back(b.slope);
    return out;
}

Rational HNPolygon::prefix_sum(std::int64_t l) const {
    if (l < 0 || l > rank_) throw std::out_of_range("HNPolygon: prefix index");
    Rational sum;
    for (const auto& b : blocks_) {
        if (l <= 0) break;
        const std::int64_t take = std::min(l, b.multiplicity);
        sum += b.slope * Rational(take);
        l -= take;
    }
    return sum;
}

std::optional<Rational> HNPolygon::epsilon_class() const {
    // Breakpoint prefix sums are exactly the partial sums at block ends.
    std::optional<Rational> eps;
    Rational sum;
    for (const auto& b : blocks_) {
        sum += b.slope * Rational(b.multiplicity);
        const Rational f = sum.frac();
        if (!eps) {
            eps = f;
        } else if (*eps != f) {
            return std::nullopt;
        }
    }
    if (!eps) return Rational(0);  // empty polygon
    return eps;
}

HNPolygon HNPolygon::dual() const {
    std::vector<Block> rev;
    rev.reserve(blocks_.size());
    for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it)
        rev.push_back(Block{-it->slope, it->multiplicity});
    return HNPolygon(std::move(rev));
}

std::strong_ordering operator<=>(const HNPolygon& p, const HNPolygon& q) {
    // Blockwise walk of the coordinate expansions.
    std::size_t i = 0, j = 0;
    std::int64_t ri = 0, rj = 0;  // consumed within current block
    while (i < p.blocks_.size() && j < q.blocks_.size()) {
        const auto c = p.blocks_[i].slope <=> q.blocks_[j].slope;
        if (c != 0) return c;
        const std::int64_t left_i = p.blocks_[i].multiplicity - ri;
        const std::int64_t left_j = q.blocks_[j].multiplicity - rj;
        const std::int64_t step = std::min(left_i, left_j);
        ri += step;
        rj += step;
        if (ri == p.blocks_[i].multiplicity) { ++i; ri = 0; }
        if (rj == q.blocks_[j].multiplicity) { ++j; rj = 0; }
    }
    const bool p_done = (i == p.blocks_.size());
    const bool q_done = (j == q.blocks_.size());
    if (p_done && q_done) return std::strong_ordering::equal;
    return p_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

HNPolygon direct_sum(const HNPolygon& p, const HNPolygon& q) {
    std::vector<Block> merged;
    merged.reserve(p.blocks().size() + q.blocks().size());
    std::size_t i = 0, j = 0;
    auto push = [&merged](const Block& b) {
        if (!merged.empty() && merged.back().slope == b.slope)
            merged.back().multiplicity += b.multiplicity;
        else
            merged.push_back(b);
    };
    while (i < p.blocks().size() || j < q.blocks().size()) {
        if (i == p.blocks().size()) push(q.blocks()[j++]);
        else if (j == q.blocks().size()) push(p.blocks()[i++]);
        else if (p.blocks()[i].slope >= q.blocks()[j].slope) push(p.blocks()[i++]);
        else push(q.blocks()[j++]);
    }
    return HNPolygon(std::move(merged));
}

bool leq_dominance(const HNPolygon& p, const HNPolygon& q) {
    if (p.rank() != q.rank())
        throw std::invalid_argument("leq_dominance: rank mismatch");
    const std::int64_t n = p.rank();
    if (n == 0) return true;
    // P_p - P_q is piecewise linear with kinks only at breakpoints of either
    // polygon, so checking the sign at the union of breakpoints suffices.
    std::vector<std::int64_t> cuts;
    std::int64_t acc = 0;
    for (const auto& b : p.blocks()) { acc += b.multiplicity; cuts.push_back(acc); }
    acc = 0;
    for (const auto& b : q.blocks()) { acc += b.multiplicity; cuts.push_back(acc); }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::int64_t l : cuts) {
        if (p.prefix_sum(l) > q.prefix_sum(l)) return false;
    }
    return p.prefix_sum(n) == q.prefix_sum(n);
}

bool strongly_slopewise_dominates(const HNPolygon& a, const HNPolygon& d) {
    if (a.rank() < d.rank())
        throw std::invalid_argument("strongly_slopewise_dominates: rank(a) < rank(d)");
    // Candidate thresholds: the slopes of a and d. Counts only change there.
    std::vector<Rational> mus;
    for (const auto& b : a.blocks()) mus.push_back(b.slope);
    for (const auto& b : d.blocks()) mus.push_back(b.slope);
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());

    auto count_ge = [](const HNPolygon& p, const Rational& mu) {
        std::int64_t c = 0;
        for (const auto& b : p.blocks()) {
            if (b.slope >= mu) c += b.multiplicity;
            else break;
        }
        return c;
    };
    for (const auto& mu : mus) {
        const std::int64_t na = count_ge(a, mu);
        const std::int64_t nd = count_ge(d, mu);
        if (na < nd) return false;
        if (na == nd) {
            for (std::int64_t i = 1; i <= na; ++i)
                if (a.coordinate(i) != d.coordinate(i)) return false;
        }
    }
    return true;
}

HNPolygon bundle_vector(const HNPolygon& v) { return v.dual(); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    HNPolygon run() {
        skip_ws();
        expect('(');
        skip_ws();
        std::vector<Block> blocks;
        if (peek() == ')') {
            ++pos_;
        } else {
            while (true) {
                blocks.push_back(item());
                skip_ws();
                const char c = next();
                if (c == ')') break;
                if (c != ',') fail("expected ',' or ')'");
                skip_ws();
            }
        }
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return HNPolygon(std::move(blocks));  // rejects non-decreasing slopes
    }

private:
    Block item() {
        const Rational slope = parse_slope();
        skip_ws();
        std::int64_t mult;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            expect('(');
            skip_ws();
            mult = parse_posint();
            skip_ws();
            expect(')');
        } else {
            // Omitted exponent: multiplicity = reduced denominator.
            const mpz_class& den = slope.denominator();
            if (!den.fits_slong_p()) fail("implied multiplicity too large");
            mult = den.get_si();
        }
        return Block{slope, mult};
    }

    Rational parse_slope() {
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        consume_digits("slope");
        if (peek() == '/') {
            ++pos_;
            consume_digits("denominator");
        }
        return Rational::from_string(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t parse_posint() {
        const std::size_t start = pos_;
        consume_digits("multiplicity");
        const std::string s(text_.substr(start, pos_ - start));
        mpz_class v(s);
        if (v < 1 || !v.fits_slong_p()) fail("multiplicity out of range");
        return v.get_si();
    }

    void consume_digits(const char* what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected digits in ") + what);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char next() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_++];
    }
    void expect(char c) {
        if (next() != c) fail(std::string("expected '") + c + "'");
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse_polygon: " + msg + " at offset " + std::to_string(pos_) +
                                    " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

HNPolygon parse_polygon(std::string_view text) { return Parser(text).run(); }

std::string format_polygon(const HNPolygon& p) {
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (const auto& b : p.blocks()) {
        if (!first) out << ',';
        first = false;
        out << b.slope.str() << "^(" << b.multiplicity << ')';
    }
    out << ')';
    return out.str();
}

}  // namespace ffext
