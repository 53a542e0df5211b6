/*
 * Copyright 2026 The algcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "algcodes/bms.hpp"
#include "algcodes/codec.hpp"
#include "algcodes/error.hpp"
#include "algcodes/galois.hpp"
#include "algcodes/geometry.hpp"
#include "algcodes/io.hpp"
#include "algcodes/linalg.hpp"
#include "algcodes/order.hpp"
#include "algcodes/poly.hpp"
#include "algcodes/presets.hpp"
#include "algcodes/rs.hpp"
#include "algcodes/transform.hpp"
#include "algcodes/voting.hpp"
