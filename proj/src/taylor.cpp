#include "bclass/taylor.hpp"

#include <numbers>

#include "bclass/errors.hpp"

namespace bclass {

namespace {

template <class T>
Jet<T> jet_of(const Node& n, T x0, std::size_t order) {
  switch (n.kind) {
    case NodeKind::Constant: return Jet<T>::constant(order, static_cast<T>(n.value));
    case NodeKind::Pi: return Jet<T>::constant(order, std::numbers::pi_v<T>);
    case NodeKind::Variable: return Jet<T>::variable(order, x0);
    case NodeKind::Negate: return -jet_of(*n.lhs, x0, order);
    case NodeKind::Add: return jet_of(*n.lhs, x0, order) + jet_of(*n.rhs, x0, order);
    case NodeKind::Subtract: return jet_of(*n.lhs, x0, order) - jet_of(*n.rhs, x0, order);
    case NodeKind::Multiply: return jet_of(*n.lhs, x0, order) * jet_of(*n.rhs, x0, order);
    case NodeKind::Divide: {
      Jet<T> b = jet_of(*n.rhs, x0, order);
      if (b[0] == T(0)) throw EvaluationError(n.position, "division by zero");
      return jet_of(*n.lhs, x0, order) / b;
    }
    case NodeKind::Power: {
      Jet<T> base = jet_of(*n.lhs, x0, order);
      if (n.exponent_den == 1) {
        if (n.exponent_num < 0 && base[0] == T(0))
          throw EvaluationError(n.position, "negative power of zero");
        return powi(base, n.exponent_num);
      }
      const T q = static_cast<T>(n.exponent_num) / static_cast<T>(n.exponent_den);
      if (base[0] > T(0)) return exp(log(base).scaled(q));
      if (base[0] == T(0) && q > T(0) && order == 1) return Jet<T>::constant(order, T(0));
      throw EvaluationError(n.position, "fractional power of a non-positive value");
    }
    case NodeKind::Call: {
      Jet<T> a = jet_of(*n.lhs, x0, order);
      switch (n.function) {
        case Builtin::Sin: return sin(a);
        case Builtin::Cos: return cos(a);
        case Builtin::Exp: return exp(a);
        case Builtin::Log:
          if (!(a[0] > T(0))) throw EvaluationError(n.position, "log of a non-positive value");
          return log(a);
        case Builtin::Sqrt:
          if (a[0] < T(0)) throw EvaluationError(n.position, "sqrt of a negative value");
          if (a[0] == T(0) && order > 1) throw EvaluationError(n.position, "sqrt is not differentiable at 0");
          return sqrt(a);
        case Builtin::Sinc: return sinc(a);
      }
      break;
    }
  }
  throw EvaluationError(n.position, "unsupported node");
}

}  // namespace

template <class T>
Jet<T> evaluate_jet(const Expression& e, T x0, std::size_t order) {
  if (e.empty()) throw std::invalid_argument("empty expression");
  return jet_of(e.root(), x0, order);
}

template <class T>
std::vector<T> derivatives(const Expression& e, T x0, std::size_t count) {
  if (count == 0) throw std::invalid_argument("derivative count must be positive");
  const Jet<T> j = evaluate_jet(e, x0, count);
  std::vector<T> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = j.derivative(k);
  return out;
}

template <class T>
T eval(const Expression& e, T x0) {
  return evaluate_jet(e, x0, 1)[0];
}

template Jet<double> evaluate_jet<double>(const Expression&, double, std::size_t);
template Jet<long double> evaluate_jet<long double>(const Expression&, long double, std::size_t);
template std::vector<double> derivatives<double>(const Expression&, double, std::size_t);
template std::vector<long double> derivatives<long double>(const Expression&, long double, std::size_t);
template double eval<double>(const Expression&, double);
template long double eval<long double>(const Expression&, long double);

}  // namespace bclass
