#include "turan/eval_result.hpp"

namespace turan {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::direct: return "direct";
    case Method::series_integer: return "series_integer";
    case Method::series_real: return "series_real";
    case Method::fourier: return "fourier";
    case Method::neumann: return "neumann";
    case Method::bound: return "bound";
    case Method::asymptotic: return "asymptotic";
    case Method::series: return "series";
    case Method::quadrature: return "quadrature";
    case Method::integral: return "integral";
  }
  return "unknown";
}

}  // namespace turan
