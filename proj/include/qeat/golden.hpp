#pragma once

#include <cmath>
#include <functional>

namespace qeat {

struct ScalarMaximum {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section maximization of a unimodal function on [lo, hi], stopping once the
/// bracket is narrower than `tolerance` or after `max_iterations`.
inline ScalarMaximum golden_section_max(const std::function<double(double)>& f, double lo,
                                        double hi, double tolerance, int max_iterations = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iterations && (b - a) > tolerance; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

}  // namespace qeat
