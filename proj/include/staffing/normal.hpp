// Copyright 2026 The Staffing Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STAFFING_NORMAL_HPP_
#define STAFFING_NORMAL_HPP_

namespace staffing {

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal CDF via erfc, accurate in both tails.
double normal_cdf(double x);

/// Phi(x) / phi(x) = sqrt(2 pi) Phi(x) exp(x^2/2). Overflows to +inf for
/// x > ~37.6 instead of producing 0/0.
double cdf_pdf_ratio(double x);

/// 1 / phi(x), +inf once exp(x^2/2) overflows.
double inverse_normal_pdf(double x);

}  // namespace staffing

#endif  // STAFFING_NORMAL_HPP_
