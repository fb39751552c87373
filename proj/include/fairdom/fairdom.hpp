// Copyright 2026 The fairdom Authors
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

// Umbrella header.

#include "fairdom/error.hpp"
#include "fairdom/fair_domination.hpp"
#include "fairdom/generators.hpp"
#include "fairdom/graph.hpp"
#include "fairdom/invariants.hpp"
#include "fairdom/io.hpp"
#include "fairdom/verification.hpp"
#include "fairdom/vertex_set.hpp"
