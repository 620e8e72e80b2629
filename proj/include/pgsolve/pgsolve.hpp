/*
 * Copyright 2026 The pgsolve authors
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

/**
 * @file pgsolve.hpp
 * Convenience single include for the whole library: the game data model,
 * game-to-game transforms, the reachability and parity solvers, register
 * games, the brute-force oracle and strategy verifier, generators, and the
 * file formats.
 */

#pragma once

#include "pgsolve/game.hpp"
#include "pgsolve/generators.hpp"
#include "pgsolve/io.hpp"
#include "pgsolve/oracle.hpp"
#include "pgsolve/reachability.hpp"
#include "pgsolve/registers.hpp"
#include "pgsolve/transforms.hpp"
#include "pgsolve/zielonka.hpp"
