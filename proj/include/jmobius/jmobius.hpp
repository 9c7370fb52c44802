// Copyright 2026 The jmobius Authors
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

#include "jmobius/cli.hpp"
#include "jmobius/deletion_contraction.hpp"
#include "jmobius/errors.hpp"
#include "jmobius/incidence.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/invariants.hpp"
#include "jmobius/json_io.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/laurent.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/poly.hpp"
#include "jmobius/poset.hpp"
#include "jmobius/qseries.hpp"
#include "jmobius/registry.hpp"
#include "jmobius/search.hpp"
#include "jmobius/subspace.hpp"
#include "jmobius/trincidence.hpp"
#include "jmobius/valuation.hpp"
#include "jmobius/verify.hpp"
