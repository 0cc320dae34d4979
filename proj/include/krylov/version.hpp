#pragma once

#define KRYLOV_TOOLKIT_VERSION "1.0.0"
