#pragma once

#include "wavesel/error.hpp"
#include "wavesel/gridmap.hpp"
#include "wavesel/wavefront.hpp"
#include "wavesel/selection.hpp"
#include "wavesel/render.hpp"
#include "wavesel/document.hpp"
