/*
   Copyright 2026 the curveclass authors

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

#include "curveclass/binary_form.hpp"
#include "curveclass/criteria.hpp"
#include "curveclass/curve.hpp"
#include "curveclass/dense_poly.hpp"
#include "curveclass/equiclassical.hpp"
#include "curveclass/errors.hpp"
#include "curveclass/grassmann.hpp"
#include "curveclass/implicitize.hpp"
#include "curveclass/json_io.hpp"
#include "curveclass/poly_linalg.hpp"
#include "curveclass/rational.hpp"
#include "curveclass/strata.hpp"
