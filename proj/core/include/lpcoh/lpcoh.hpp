// Copyright 2026 The lpcoh Authors
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

#pragma once

#include "lpcoh/classifier.hpp"
#include "lpcoh/error.hpp"
#include "lpcoh/isoperimetry.hpp"
#include "lpcoh/lie_algebra.hpp"
#include "lpcoh/models.hpp"
#include "lpcoh/polynomial.hpp"
#include "lpcoh/rat_matrix.hpp"
#include "lpcoh/rational.hpp"
#include "lpcoh/spectral.hpp"
#include "lpcoh/threshold.hpp"
