#include "mexsum/identities.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <chrono>
#include <istream>
#include <sstream>
#include <utility>

#include "mexsum/mexstats.hpp"
#include "mexsum/partitions.hpp"

namespace mexsum::identities {

// ---------------------------------------------------------------------------
// AST construction and comparison
// ---------------------------------------------------------------------------

namespace {

ExprPtr wrap(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr expr_int(mpz_class value) { return wrap(Expr{IntConst{std::move(value)}}); }
ExprPtr expr_qprod(int sign, unsigned a, unsigned b) { return wrap(Expr{QProd{sign, a, b}}); }
ExprPtr expr_named(SeriesTag tag) { return wrap(Expr{Named{tag}}); }
ExprPtr expr_stat(std::string name) { return wrap(Expr{Stat{std::move(name)}}); }
ExprPtr expr_bin(BinKind kind, ExprPtr lhs, ExprPtr rhs) {
    return wrap(Expr{Bin{kind, std::move(lhs), std::move(rhs)}});
}
ExprPtr expr_pow(ExprPtr base, unsigned exponent) {
    return wrap(Expr{PowExpr{std::move(base), exponent}});
}
ExprPtr expr_half(ExprPtr arg) { return wrap(Expr{Half{std::move(arg)}}); }

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntConst>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, QProd>) {
                return lhs.sign == rhs.sign && lhs.a == rhs.a && lhs.b == rhs.b;
            } else if constexpr (std::is_same_v<T, Named>) {
                return lhs.tag == rhs.tag;
            } else if constexpr (std::is_same_v<T, Stat>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, Bin>) {
                return lhs.kind == rhs.kind && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                       structurally_equal(*lhs.rhs, *rhs.rhs);
            } else if constexpr (std::is_same_v<T, PowExpr>) {
                return lhs.exponent == rhs.exponent && structurally_equal(*lhs.base, *rhs.base);
            } else {
                static_assert(std::is_same_v<T, Half>);
                return structurally_equal(*lhs.arg, *rhs.arg);
            }
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: additive 1, multiplicative 2, power 3, primary 4.
int precedence(const Expr& e) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Bin>) {
                return (node.kind == BinKind::add || node.kind == BinKind::sub) ? 1 : 2;
            } else if constexpr (std::is_same_v<T, PowExpr>) {
                return 3;
            } else {
                return 4;
            }
        },
        e.node);
}

void print_expr(std::ostream& os, const Expr& e, int parent_prec, bool right_operand) {
    const int prec = precedence(e);
    const bool parens = prec < parent_prec || (prec == parent_prec && right_operand && prec <= 2);
    if (parens) os << '(';
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntConst>) {
                os << node.value.get_str();
            } else if constexpr (std::is_same_v<T, QProd>) {
                os << "QP(" << (node.sign > 0 ? '+' : '-') << ',' << node.a << ',' << node.b << ')';
            } else if constexpr (std::is_same_v<T, Named>) {
                switch (node.tag) {
                    case SeriesTag::jacobi_cube: os << "JACOBI3"; break;
                    case SeriesTag::triangular_theta: os << "THETA_T"; break;
                    case SeriesTag::bilateral_theta: os << "THETA_BI"; break;
                }
            } else if constexpr (std::is_same_v<T, Stat>) {
                os << "STAT(" << node.name << ')';
            } else if constexpr (std::is_same_v<T, Bin>) {
                print_expr(os, *node.lhs, prec, false);
                switch (node.kind) {
                    case BinKind::add: os << " + "; break;
                    case BinKind::sub: os << " - "; break;
                    case BinKind::mul: os << " * "; break;
                    case BinKind::div: os << " / "; break;
                }
                print_expr(os, *node.rhs, prec, true);
            } else if constexpr (std::is_same_v<T, PowExpr>) {
                print_expr(os, *node.base, prec + 1, false);
                os << '^' << node.exponent;
            } else {
                static_assert(std::is_same_v<T, Half>);
                os << "HALF(";
                print_expr(os, *node.arg, 0, false);
                os << ')';
            }
        },
        e.node);
    if (parens) os << ')';
}

}  // namespace

std::string to_text(const Expr& e) {
    std::ostringstream os;
    print_expr(os, e, 0, false);
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over a small token stream
// ---------------------------------------------------------------------------

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

struct Token {
    enum class Kind { integer, ident, symbol, eq, end };
    Kind kind = Kind::end;
    std::string text;
    std::size_t position = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.position = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::end;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_.kind = Token::Kind::integer;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            current_.kind = Token::Kind::ident;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
            current_.kind = Token::Kind::eq;
            current_.text = "==";
            pos_ += 2;
            return;
        }
        static constexpr std::string_view symbols = "()+-*/^,:";
        if (symbols.find(c) != std::string_view::npos) {
            current_.kind = Token::Kind::symbol;
            current_.text = std::string(1, c);
            ++pos_;
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    ExprPtr parse_full() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    // identity := expr '==' expr
    std::pair<ExprPtr, ExprPtr> parse_identity() {
        ExprPtr lhs = parse_expr();
        const Token t = lexer_.take();
        if (t.kind != Token::Kind::eq) {
            throw ParseError(t.position, "expected '==' between identity sides");
        }
        ExprPtr rhs = parse_expr();
        expect_end();
        return {std::move(lhs), std::move(rhs)};
    }

private:
    void expect_end() {
        const Token& t = lexer_.peek();
        if (t.kind != Token::Kind::end) {
            throw ParseError(t.position, "expected end of input, found '" + t.text + "'");
        }
    }

    bool accept_symbol(char c) {
        const Token& t = lexer_.peek();
        if (t.kind == Token::Kind::symbol && t.text.size() == 1 && t.text[0] == c) {
            lexer_.take();
            return true;
        }
        return false;
    }

    void expect_symbol(char c) {
        const Token t = lexer_.take();
        if (t.kind != Token::Kind::symbol || t.text.size() != 1 || t.text[0] != c) {
            throw ParseError(t.position, std::string("expected '") + c + "'");
        }
    }

    unsigned expect_uint(const char* what, unsigned long max_value) {
        const Token t = lexer_.take();
        if (t.kind != Token::Kind::integer) {
            throw ParseError(t.position, std::string("expected ") + what);
        }
        const mpz_class value(t.text);
        if (value > max_value) {
            throw ParseError(t.position, std::string(what) + " out of range (max " +
                                             std::to_string(max_value) + ")");
        }
        return static_cast<unsigned>(value.get_ui());
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (accept_symbol('+')) lhs = expr_bin(BinKind::add, std::move(lhs), parse_term());
            else if (accept_symbol('-')) lhs = expr_bin(BinKind::sub, std::move(lhs), parse_term());
            else return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            if (accept_symbol('*')) lhs = expr_bin(BinKind::mul, std::move(lhs), parse_factor());
            else if (accept_symbol('/')) lhs = expr_bin(BinKind::div, std::move(lhs), parse_factor());
            else return lhs;
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_primary();
        if (accept_symbol('^')) {
            const Token t = lexer_.peek();
            const unsigned exponent = expect_uint("exponent", 64);
            if (exponent < 1) throw ParseError(t.position, "exponent must be >= 1");
            return expr_pow(std::move(base), exponent);
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token t = lexer_.take();
        if (t.kind == Token::Kind::integer) {
            return expr_int(mpz_class(t.text));
        }
        if (t.kind == Token::Kind::symbol && t.text == "(") {
            ExprPtr e = parse_expr();
            expect_symbol(')');
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            if (t.text == "QP") return parse_qprod();
            if (t.text == "JACOBI3") return expr_named(SeriesTag::jacobi_cube);
            if (t.text == "THETA_T") return expr_named(SeriesTag::triangular_theta);
            if (t.text == "THETA_BI") return expr_named(SeriesTag::bilateral_theta);
            if (t.text == "STAT") return parse_stat();
            if (t.text == "HALF") {
                expect_symbol('(');
                ExprPtr arg = parse_expr();
                expect_symbol(')');
                return expr_half(std::move(arg));
            }
            throw ParseError(t.position, "unknown name '" + t.text +
                                             "' (expected QP, JACOBI3, THETA_T, THETA_BI, STAT or HALF)");
        }
        throw ParseError(t.position, "expected an integer, a named series, QP(...), STAT(...), "
                                     "HALF(...) or a parenthesized expression");
    }

    ExprPtr parse_qprod() {
        expect_symbol('(');
        const Token sign_token = lexer_.take();
        int sign = 0;
        if (sign_token.kind == Token::Kind::symbol && sign_token.text == "+") sign = +1;
        else if (sign_token.kind == Token::Kind::symbol && sign_token.text == "-") sign = -1;
        else throw ParseError(sign_token.position, "expected '+' or '-' as QP sign");
        expect_symbol(',');
        const Token a_token = lexer_.peek();
        const unsigned a = expect_uint("QP offset", 1u << 20);
        if (a < 1) throw ParseError(a_token.position, "QP offset must be >= 1");
        expect_symbol(',');
        const Token b_token = lexer_.peek();
        const unsigned b = expect_uint("QP step", 1u << 20);
        if (b < 1) throw ParseError(b_token.position, "QP step must be >= 1");
        expect_symbol(')');
        return expr_qprod(sign, a, b);
    }

    ExprPtr parse_stat() {
        expect_symbol('(');
        const Token name_token = lexer_.take();
        if (name_token.kind != Token::Kind::ident) {
            throw ParseError(name_token.position, "expected a statistic name");
        }
        if (!is_stat_name(name_token.text)) {
            std::string expected;
            for (const std::string& name : stat_names()) {
                if (!expected.empty()) expected += ", ";
                expected += name;
            }
            throw ParseError(name_token.position,
                             "unknown statistic '" + name_token.text + "' (expected one of: " +
                                 expected + ")");
        }
        expect_symbol(')');
        return expr_stat(name_token.text);
    }

    Lexer lexer_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_full(); }

// ---------------------------------------------------------------------------
// Statistic series (scalable routes)
// ---------------------------------------------------------------------------

const std::vector<std::string>& stat_names() {
    static const std::vector<std::string> names = {
        "sigma_mex", "sigma_bar", "sigma_o", "sigma_e", "o", "e",
        "o1", "o3", "o1_minus_o3", "d2", "d2_even", "d2_odd",
    };
    return names;
}

bool is_stat_name(std::string_view name) {
    for (const std::string& known : stat_names()) {
        if (known == name) return true;
    }
    return false;
}

std::vector<mpz_class> stat_series(const std::string& name, std::size_t order) {
    if (name == "d2" || name == "d2_even" || name == "d2_odd") {
        partitions::D2Table table = partitions::d2_table(order);
        if (name == "d2") return std::move(table.d2);
        if (name == "d2_even") return std::move(table.d2e);
        return std::move(table.d2o);
    }
    std::vector<mpz_class> out(order + 1);
    partitions::warm_caches(static_cast<unsigned>(order));
    for (std::size_t n = 0; n <= order; ++n) {
        const unsigned un = static_cast<unsigned>(n);
        if (name == "sigma_mex") out[n] = mexstats::sigma_mex(un);
        else if (name == "sigma_bar") out[n] = mexstats::sigma_bar_mex(un);
        else if (name == "sigma_o") out[n] = mexstats::sigma_o_moment(un, 1);
        else if (name == "sigma_e") out[n] = mexstats::sigma_e_moment(un, 1);
        else if (name == "o") out[n] = mexstats::oe_formula(un).o;
        else if (name == "e") out[n] = mexstats::oe_formula(un).e;
        else if (name == "o1") out[n] = mexstats::o1_o3_formula(un).o1;
        else if (name == "o3") out[n] = mexstats::o1_o3_formula(un).o3;
        else if (name == "o1_minus_o3") out[n] = mexstats::o1_minus_o3_formula(un);
        else throw std::invalid_argument("unknown statistic name: " + name);
    }
    return out;
}

const std::vector<mpz_class>& EvalContext::stat(const std::string& name, std::size_t order) {
    auto it = cache_.find(name);
    if (it == cache_.end() || it->second.size() <= order) {
        it = cache_.insert_or_assign(name, stat_series(name, order)).first;
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

series::TruncatedSeries eval_node(const Expr& e, std::size_t order, EvalContext& ctx) {
    using series::TruncatedSeries;
    return std::visit(
        [&](const auto& node) -> TruncatedSeries {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, IntConst>) {
                return series::monomial(order, 0, node.value);
            } else if constexpr (std::is_same_v<T, QProd>) {
                return series::q_pochhammer(node.sign, node.a, node.b, order);
            } else if constexpr (std::is_same_v<T, Named>) {
                switch (node.tag) {
                    case SeriesTag::jacobi_cube: return series::jacobi_cube_series(order);
                    case SeriesTag::triangular_theta: return series::triangular_theta(order);
                    default: return series::bilateral_theta(order);
                }
            } else if constexpr (std::is_same_v<T, Stat>) {
                const std::vector<mpz_class>& values = ctx.stat(node.name, order);
                std::vector<mpz_class> coeffs(values.begin(), values.begin() + order + 1);
                return TruncatedSeries(order, std::move(coeffs));
            } else if constexpr (std::is_same_v<T, Bin>) {
                TruncatedSeries lhs = eval_node(*node.lhs, order, ctx);
                TruncatedSeries rhs = eval_node(*node.rhs, order, ctx);
                switch (node.kind) {
                    case BinKind::add: return series::add(lhs, rhs);
                    case BinKind::sub: return series::sub(lhs, rhs);
                    case BinKind::mul: return series::mul(lhs, rhs);
                    default: {
                        const mpz_class& c0 = rhs.coeff(0);
                        if (c0 != 1 && c0 != -1) {
                            throw EvalError(
                                "division requires a denominator with constant term +1 or -1, got " +
                                c0.get_str());
                        }
                        return series::mul(lhs, series::invert(rhs));
                    }
                }
            } else if constexpr (std::is_same_v<T, PowExpr>) {
                return series::pow(eval_node(*node.base, order, ctx), node.exponent);
            } else {
                static_assert(std::is_same_v<T, Half>);
                TruncatedSeries inner = eval_node(*node.arg, order, ctx);
                std::vector<mpz_class> halved(order + 1);
                for (std::size_t i = 0; i <= order; ++i) {
                    const mpz_class& c = inner.coeff(i);
                    if (mpz_odd_p(c.get_mpz_t())) {
                        throw EvalError("HALF applied to an odd coefficient " + c.get_str() +
                                        " at exponent " + std::to_string(i));
                    }
                    halved[i] = c / 2;
                }
                return TruncatedSeries(order, std::move(halved));
            }
        },
        e.node);
}

}  // namespace

series::TruncatedSeries evaluate(const Expr& e, std::size_t order, EvalContext& ctx) {
    return eval_node(e, order, ctx);
}

series::TruncatedSeries evaluate(const Expr& e, std::size_t order) {
    EvalContext ctx;
    return evaluate(e, order, ctx);
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

IdentityEntry make_entry(const char* id, const char* lhs, const char* rhs, const char* note) {
    IdentityEntry entry;
    entry.id = id;
    entry.lhs = parse(lhs);
    entry.rhs = parse(rhs);
    entry.note = note;
    entry.default_order = 60;
    return entry;
}

}  // namespace

const std::vector<IdentityEntry>& registry() {
    static const std::vector<IdentityEntry> entries = {
        make_entry("ANDREWS_NEWMAN", "STAT(sigma_mex)", "QP(+,1,1)^2",
                   "Andrews-Newman: the mex sum over partitions generates (-q;q)^2, the "
                   "two-colored distinct-parts count"),
        make_entry("SIGMA_O_GFN", "STAT(sigma_o)", "HALF(QP(+,1,1)^2 + QP(-,1,1)^2)",
                   "odd-mex sum refinement: ((-q;q)^2 + (q;q)^2)/2"),
        make_entry("SIGMA_E_GFN", "STAT(sigma_e)", "HALF(QP(+,1,1)^2 - QP(-,1,1)^2)",
                   "even-mex sum refinement: ((-q;q)^2 - (q;q)^2)/2"),
        make_entry("SIGMA_O_EQ_D2E", "STAT(sigma_o)", "STAT(d2_even)",
                   "odd-mex sum counts two-colored distinct partitions with an even number "
                   "of parts"),
        make_entry("SIGMA_E_EQ_D2O", "STAT(sigma_e)", "STAT(d2_odd)",
                   "even-mex sum counts two-colored distinct partitions with an odd number "
                   "of parts"),
        make_entry("SIGMA_BAR_GFN", "STAT(sigma_bar)", "QP(-,1,1)^2",
                   "mex sum weighted by (-1)^(mex-1) generates (q;q)^2"),
        make_entry("JACOBI_CUBE_ID", "JACOBI3", "QP(-,1,1)^3",
                   "Jacobi: sum (2m+1)(-1)^m q^(m(m+1)/2) = (q;q)^3"),
        make_entry("TRI_THETA_ID", "THETA_T", "QP(-,2,2) / QP(-,1,2)",
                   "Ramanujan theta: sum q^(m(m+1)/2) = (q^2;q^2)/(q;q^2)"),
        make_entry("EULER_ODD", "QP(+,1,1) * QP(-,1,2)", "1",
                   "Euler: (-q;q) = 1/(q;q^2)"),
        make_entry("JTP_SPECIAL", "THETA_BI", "QP(-,1,4) * QP(-,3,4) * QP(-,4,4)",
                   "Jacobi triple product specialization for the bilateral theta sum"),
        make_entry("O1_O3_GFN", "STAT(o1_minus_o3)", "QP(+,2,2)",
                   "mex mod 4 refinement: o1 - o3 generates (-q^2;q^2)"),
    };
    return entries;
}

const IdentityEntry* find_entry(std::string_view id) {
    for (const IdentityEntry& entry : registry()) {
        if (entry.id == id) return &entry;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

VerificationReport verify_entry(const IdentityEntry& entry, std::size_t order) {
    const auto start = std::chrono::steady_clock::now();
    EvalContext ctx;
    const series::TruncatedSeries lhs = evaluate(*entry.lhs, order, ctx);
    const series::TruncatedSeries rhs = evaluate(*entry.rhs, order, ctx);
    VerificationReport report;
    report.id = entry.id;
    report.order = order;
    report.mismatch = series::first_mismatch(lhs, rhs);
    report.pass = !report.mismatch.has_value();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport verify(std::string_view id, std::size_t order) {
    const IdentityEntry* entry = find_entry(id);
    if (entry == nullptr) {
        throw std::invalid_argument("unknown identity id: " + std::string(id));
    }
    return verify_entry(*entry, order);
}

std::vector<VerificationReport> verify_all(std::size_t order) {
    std::vector<VerificationReport> reports;
    reports.reserve(registry().size());
    for (const IdentityEntry& entry : registry()) {
        reports.push_back(verify_entry(entry, order));
    }
    return reports;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["id"] = report.id;
    j["order"] = report.order;
    j["status"] = report.pass ? "pass" : "fail";
    if (report.mismatch.has_value()) {
        j["mismatch"] = {{"exponent", report.mismatch->exponent},
                         {"lhs", report.mismatch->lhs.get_str()},
                         {"rhs", report.mismatch->rhs.get_str()}};
    } else {
        j["mismatch"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Identity text files
// ---------------------------------------------------------------------------

std::string format_entry(const IdentityEntry& entry) {
    return entry.id + ": " + to_text(*entry.lhs) + " == " + to_text(*entry.rhs);
}

IdentityEntry parse_entry_line(std::string_view line) {
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError(line.size(), "expected 'ID:' before the identity");
    }
    std::string id(line.substr(0, colon));
    // Trim the id.
    while (!id.empty() && std::isspace(static_cast<unsigned char>(id.front()))) id.erase(id.begin());
    while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back()))) id.pop_back();
    if (id.empty()) throw ParseError(0, "empty identity id");

    IdentityEntry entry;
    entry.id = std::move(id);
    auto [lhs, rhs] = Parser(line.substr(colon + 1)).parse_identity();
    entry.lhs = std::move(lhs);
    entry.rhs = std::move(rhs);
    return entry;
}

std::vector<IdentityEntry> read_identity_file(std::istream& in) {
    std::vector<IdentityEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        entries.push_back(parse_entry_line(line));
    }
    return entries;
}

std::string format_registry() {
    std::string out;
    for (const IdentityEntry& entry : registry()) {
        out += format_entry(entry);
        out += '\n';
    }
    return out;
}

}  // namespace mexsum::identities
