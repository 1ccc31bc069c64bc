// Copyright 2026 The lattice-eds Authors
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

#ifndef LATTICE_EDS_LATTICE_EDS_HPP_
#define LATTICE_EDS_LATTICE_EDS_HPP_

#include "lattice_eds/constructions.hpp"
#include "lattice_eds/error.hpp"
#include "lattice_eds/graph.hpp"
#include "lattice_eds/grid.hpp"
#include "lattice_eds/packing.hpp"
#include "lattice_eds/periodic.hpp"
#include "lattice_eds/solver.hpp"

#endif  // LATTICE_EDS_LATTICE_EDS_HPP_
