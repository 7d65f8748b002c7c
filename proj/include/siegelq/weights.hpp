#ifndef SIEGELQ_WEIGHTS_HPP
#define SIEGELQ_WEIGHTS_HPP

#include <vector>

#include "siegelq/rational.hpp"

namespace siegelq {

/// Dominant weight kappa = (k_1 >= ... >= k_g >= 0) with a det-power twist h.
struct DominantWeight {
    std::vector<long> kappa;
    long det_twist = 0;
};

bool is_dominant(const std::vector<long>& kappa);

/// Rank of the GL_g highest-weight module of weight kappa (Weyl dimension
/// formula for type A_{g-1}); the d(E_kappa) bookkeeping number.
Integer dim_gl(const std::vector<long>& kappa);

/// Rank of the Sp_2g highest-weight module of weight kappa (Weyl dimension
/// formula for type C_g); the d(D_kappa) bookkeeping number.
Integer dim_sp(const std::vector<long>& kappa);

}  // namespace siegelq

#endif
