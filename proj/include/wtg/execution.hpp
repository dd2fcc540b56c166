/*
   Copyright 2026 The wtg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

namespace wtg {

/// Selects the serial reference loop or the OpenMP kernel for subset and
/// label folds. Both produce identical exact results.
enum class Execution { Serial, Parallel };

/// Thread count for Parallel folds; 0 keeps the OpenMP default.
void set_parallelism(int threads);
int parallelism();

}  // namespace wtg
