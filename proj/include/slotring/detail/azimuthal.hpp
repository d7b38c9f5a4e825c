// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "slotring/field_map.hpp"

namespace slotring::detail {

/// Ascending DFT orders for an N-point azimuthal grid:
/// -floor(N/2) .. ceil(N/2)-1.
std::vector<int> dft_orders(std::size_t n);

/// Complex coefficients c_k = (1/N) sum_j v_j e^{-i k phi_j}, aligned with
/// dft_orders(N).
std::vector<cplx> dft_coeffs(const LineTrace& t);

/// Dominant azimuthal order: argmax over k >= 1 of |c_k| + |c_{-k}|.
int dominant_order(const std::vector<int>& orders, const std::vector<cplx>& coeffs);

}  // namespace slotring::detail
