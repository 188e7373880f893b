// Copyright 2026 The f2sigma Authors.
//
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

#ifndef F2SIGMA_F2SIGMA_HPP
#define F2SIGMA_F2SIGMA_HPP

#include <f2sigma/analysis.hpp>
#include <f2sigma/beatty.hpp>
#include <f2sigma/bit_series.hpp>
#include <f2sigma/clmul.hpp>
#include <f2sigma/error.hpp>
#include <f2sigma/oeis.hpp>
#include <f2sigma/seqgen.hpp>
#include <f2sigma/series_io.hpp>
#include <f2sigma/verification.hpp>

#endif
