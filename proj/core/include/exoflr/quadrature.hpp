#pragma once

#include <functional>

namespace exoflr {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace exoflr
