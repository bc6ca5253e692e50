#pragma once

#include "seqwht/bits.hpp"
#include "seqwht/builders.hpp"
#include "seqwht/circuit.hpp"
#include "seqwht/error.hpp"
#include "seqwht/filter_spec.hpp"
#include "seqwht/filters.hpp"
#include "seqwht/gate.hpp"
#include "seqwht/signals.hpp"
#include "seqwht/simulator.hpp"
#include "seqwht/walsh.hpp"
