// Copyright 2026 The hellycert Authors
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

#ifndef HELLYCERT_HELLYCERT_HPP
#define HELLYCERT_HELLYCERT_HPP

#include "hellycert/bctree.hpp"
#include "hellycert/certificates.hpp"
#include "hellycert/cuts.hpp"
#include "hellycert/geometry.hpp"
#include "hellycert/instances.hpp"
#include "hellycert/lp.hpp"
#include "hellycert/parallel.hpp"
#include "hellycert/rational.hpp"
#include "hellycert/search.hpp"
#include "hellycert/serialize.hpp"
#include "hellycert/splitcover.hpp"

#endif  // HELLYCERT_HELLYCERT_HPP
