// Copyright 2026 The k3lat Authors
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

#include "k3lat/audit.hpp"
#include "k3lat/cyclotomic.hpp"
#include "k3lat/error.hpp"
#include "k3lat/expr.hpp"
#include "k3lat/finite_form.hpp"
#include "k3lat/geography.hpp"
#include "k3lat/gluing.hpp"
#include "k3lat/inertia.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"
#include "k3lat/parallel.hpp"
#include "k3lat/qseries.hpp"
#include "k3lat/smith.hpp"
#include "k3lat/vectors.hpp"
#include "k3lat/weil.hpp"
