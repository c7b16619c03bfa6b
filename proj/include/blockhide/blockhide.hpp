#pragma once

#include "blockhide/bitstream.hpp"
#include "blockhide/block.hpp"
#include "blockhide/code_tables.hpp"
#include "blockhide/engine.hpp"
#include "blockhide/errors.hpp"
#include "blockhide/image.hpp"
#include "blockhide/metrics.hpp"
#include "blockhide/pbm.hpp"
