// Copyright 2026 The Hardy Interferometer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the whole library.

#ifndef HARDY_HARDY_HPP
#define HARDY_HARDY_HPP

#include "hardy/bell_audit.hpp"
#include "hardy/closed_form.hpp"
#include "hardy/errors.hpp"
#include "hardy/event_sim.hpp"
#include "hardy/hardy_solver.hpp"
#include "hardy/ifm.hpp"
#include "hardy/lhv_oracle.hpp"
#include "hardy/optics.hpp"
#include "hardy/philox.hpp"
#include "hardy/serialize.hpp"
#include "hardy/sweep.hpp"

#endif  // HARDY_HARDY_HPP
