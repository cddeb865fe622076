// Copyright 2026 The gausskit Authors
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

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/errors.hpp"
#include "gausskit/core/exp_base.hpp"
#include "gausskit/core/gate.hpp"
#include "gausskit/core/matrix.hpp"
#include "gausskit/core/phase.hpp"
#include "gausskit/core/rng.hpp"
#include "gausskit/core/spec.hpp"
#include "gausskit/core/text_format.hpp"

#include "gausskit/builder/builders.hpp"
#include "gausskit/builder/monomial.hpp"

#include "gausskit/optimizer/error_budget.hpp"
#include "gausskit/optimizer/ordering.hpp"
#include "gausskit/optimizer/packing.hpp"
#include "gausskit/optimizer/pruning.hpp"
#include "gausskit/optimizer/thresholds.hpp"

#include "gausskit/simulator/exact.hpp"
#include "gausskit/simulator/ideal.hpp"
#include "gausskit/simulator/monte_carlo.hpp"
#include "gausskit/simulator/noise.hpp"
#include "gausskit/simulator/postselected.hpp"
#include "gausskit/simulator/report.hpp"
#include "gausskit/simulator/run_noisy.hpp"
#include "gausskit/simulator/state_vector.hpp"

#include "gausskit/resources/cost_model.hpp"
#include "gausskit/resources/estimate.hpp"
#include "gausskit/resources/t_depth.hpp"
