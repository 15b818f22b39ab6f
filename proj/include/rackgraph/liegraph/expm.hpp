#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace rackgraph::liegraph {

using Mat = Eigen::MatrixXd;
using RowVec = Eigen::RowVectorXd;

/// Matrix exponential. Nilpotent inputs (some power exactly zero) get the
/// terminating series; everything else goes through scaling and squaring
/// with the degree-13 Padé approximant.
inline Mat matrix_exp(const Mat& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_exp: matrix is not square");
    const Eigen::Index n = a.rows();
    if (!a.allFinite()) throw std::overflow_error("matrix_exp: non-finite entries");
    if (n == 0) return a;

    {
        Mat term = Mat::Identity(n, n), sum = Mat::Identity(n, n);
        for (Eigen::Index k = 1; k <= n; ++k) {
            term = term * a / static_cast<double>(k);
            if ((term.array() == 0.0).all()) return sum;
            sum += term;
        }
    }

    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
                               129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
                               1323241920.0,        40840800.0,          960960.0,           16380.0,
                               182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int s = 0;
    if (norm > theta13) s = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    if (s > 1000) throw std::overflow_error("matrix_exp: norm too large");
    const Mat x = a / std::ldexp(1.0, s);
    const Mat id = Mat::Identity(n, n);
    const Mat x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
    const Mat u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * id);
    const Mat v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;
    Mat r = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < s; ++k) r = r * r;
    if (!r.allFinite()) throw std::overflow_error("matrix_exp: overflow");
    return r;
}

}  // namespace rackgraph::liegraph
