#pragma once

#include "krylov/core/density.hpp"
#include "krylov/core/eigensystem.hpp"
#include "krylov/core/errors.hpp"
#include "krylov/core/operator_space.hpp"
#include "krylov/core/rotation.hpp"
#include "krylov/core/spin.hpp"
#include "krylov/core/tensor.hpp"
#include "krylov/core/types.hpp"
#include "krylov/diagnostics/entropy_otoc.hpp"
#include "krylov/diagnostics/gap_ratio.hpp"
#include "krylov/diagnostics/ipr.hpp"
#include "krylov/engine/complexity.hpp"
#include "krylov/engine/floquet_arnoldi.hpp"
#include "krylov/engine/gap_lanczos.hpp"
#include "krylov/engine/krylov_basis.hpp"
#include "krylov/engine/lanczos.hpp"
#include "krylov/engine/late_time.hpp"
#include "krylov/engine/statistics.hpp"
#include "krylov/models/cue.hpp"
#include "krylov/models/kicked_top.hpp"
#include "krylov/models/rmte.hpp"
#include "krylov/models/rng.hpp"
#include "krylov/models/seeds.hpp"
#include "krylov/models/tfim.hpp"
