#pragma once

// Arithmetic expression trees evaluated in interval arithmetic.

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pscert/exactnum/interval.hpp"

namespace pscert {

enum class UnaryOp { Neg, Exp, Log, Cos, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div };

class Expr {
public:
    struct Const {
        Rational value;
    };
    struct Var {
        std::size_t index;
    };
    struct Pi {};
    struct Unary {
        UnaryOp op;
        std::shared_ptr<const Expr> arg;
    };
    struct Binary {
        BinaryOp op;
        std::shared_ptr<const Expr> lhs, rhs;
    };
    using Node = std::variant<Const, Var, Pi, Unary, Binary>;

    static Expr constant(Rational q) { return Expr(Const{std::move(q)}); }
    static Expr constant(long v) { return constant(Rational(v)); }
    static Expr var(std::size_t i) { return Expr(Var{i}); }
    static Expr pi() { return Expr(Pi{}); }

    const Node& node() const { return *node_; }

    friend Expr operator+(Expr a, Expr b) { return bin(BinaryOp::Add, std::move(a), std::move(b)); }
    friend Expr operator-(Expr a, Expr b) { return bin(BinaryOp::Sub, std::move(a), std::move(b)); }
    friend Expr operator*(Expr a, Expr b) { return bin(BinaryOp::Mul, std::move(a), std::move(b)); }
    friend Expr operator/(Expr a, Expr b) { return bin(BinaryOp::Div, std::move(a), std::move(b)); }
    friend Expr operator-(Expr a) { return un(UnaryOp::Neg, std::move(a)); }
    friend Expr exp(Expr a) { return un(UnaryOp::Exp, std::move(a)); }
    friend Expr log(Expr a) { return un(UnaryOp::Log, std::move(a)); }
    friend Expr cos(Expr a) { return un(UnaryOp::Cos, std::move(a)); }
    friend Expr sqrt(Expr a) { return un(UnaryOp::Sqrt, std::move(a)); }
    friend Expr abs(Expr a) { return un(UnaryOp::Abs, std::move(a)); }

private:
    static Expr un(UnaryOp op, Expr a) { return Expr(Unary{op, std::make_shared<const Expr>(std::move(a))}); }
    static Expr bin(BinaryOp op, Expr a, Expr b) {
        return Expr(Binary{op, std::make_shared<const Expr>(std::move(a)), std::make_shared<const Expr>(std::move(b))});
    }
    explicit Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
    std::shared_ptr<const Node> node_;
};

/// Enclosure of expr at the given working precision. Inputs are used as given.
inline RealInterval interval_eval(const Expr& expr, std::span<const RealInterval> inputs, Precision prec) {
    struct Visitor {
        std::span<const RealInterval> inputs;
        Precision prec;
        RealInterval operator()(const Expr::Const& c) const { return RealInterval::point(c.value, prec); }
        RealInterval operator()(const Expr::Var& v) const {
            if (v.index >= inputs.size()) throw std::out_of_range("expression variable out of range");
            return inputs[v.index];
        }
        RealInterval operator()(const Expr::Pi&) const { return RealInterval::pi(prec); }
        RealInterval operator()(const Expr::Unary& u) const {
            RealInterval x = std::visit(*this, u.arg->node());
            switch (u.op) {
                case UnaryOp::Neg: return -x;
                case UnaryOp::Exp: return exp(x);
                case UnaryOp::Log: return log(x);
                case UnaryOp::Cos: return cos(x);
                case UnaryOp::Sqrt: return sqrt(x);
                case UnaryOp::Abs: return abs(x);
            }
            throw std::logic_error("unknown unary op");
        }
        RealInterval operator()(const Expr::Binary& b) const {
            RealInterval x = std::visit(*this, b.lhs->node());
            RealInterval y = std::visit(*this, b.rhs->node());
            switch (b.op) {
                case BinaryOp::Add: return x + y;
                case BinaryOp::Sub: return x - y;
                case BinaryOp::Mul: return x * y;
                case BinaryOp::Div: return x / y;
            }
            throw std::logic_error("unknown binary op");
        }
    };
    return std::visit(Visitor{inputs, prec}, expr.node());
}

/// Evaluate with exact rational inputs, doubling precision from `start`
/// until the enclosure is narrower than `width`.
inline RealInterval interval_eval(const Expr& expr, std::span<const Rational> inputs, const Rational& width,
                                  Precision start = precision_policy::start_bits,
                                  Precision cap = precision_policy::max_bits()) {
    for (Precision prec = start;; prec *= 2) {
        std::vector<RealInterval> xs;
        xs.reserve(inputs.size());
        for (const auto& q : inputs) xs.push_back(RealInterval::point(q, prec));
        RealInterval r = interval_eval(expr, xs, prec);
        if (r.width() < width) return r;
        if (prec * 2 > cap)
            throw PrecisionExhausted("width " + to_string(width) + " not reached at " + std::to_string(prec) + " bits");
    }
}

struct NearestIntegerDistance {
    RealInterval distance;
    bool ambiguous = false;  // enclosure straddles a half-integer
    Integer nearest;         // meaningful only when !ambiguous
};

/// Enclosure of min_m |x - m| over integers m.
inline NearestIntegerDistance nearest_integer_distance(const RealInterval& x) {
    const Precision prec = x.prec();
    if (!(x.width() < make_rational(1, 4)))
        throw AmbiguousEnclosure("enclosure too wide to locate the nearest integer");
    Rational lo = x.lo_rational(), hi = x.hi_rational();
    Integer m_lo = floor_of(lo + make_rational(1, 2));
    Integer m_hi = floor_of(hi + make_rational(1, 2));
    if (m_lo != m_hi) {
        // A half-integer lies inside: report the conservative envelope [0, 1/2].
        return {RealInterval::bounds(0, make_rational(1, 2), prec), true, m_lo};
    }
    const Rational m(m_lo);
    Rational d_lo = lo - m, d_hi = hi - m;
    Rational out_lo = (d_lo > 0) ? d_lo : (d_hi < 0 ? -d_hi : Rational(0));
    Rational out_hi = std::max(abs(d_lo), abs(d_hi));
    return {RealInterval::bounds(out_lo, out_hi, prec + 4), false, m_lo};
}

}  // namespace pscert
