// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <softmatrix/bit_matrix.hpp>
#include <softmatrix/decision.hpp>
#include <softmatrix/error.hpp>
#include <softmatrix/io.hpp>
#include <softmatrix/model.hpp>
#include <softmatrix/products.hpp>
#include <softmatrix/soft_matrix.hpp>
#include <softmatrix/spy.hpp>
