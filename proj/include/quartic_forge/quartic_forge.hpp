#pragma once

#include "char_table.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "f2.hpp"
#include "forms.hpp"
#include "galois.hpp"
#include "modp.hpp"
#include "number_field.hpp"
#include "picard.hpp"
#include "pipeline.hpp"
#include "poly_parse.hpp"
#include "rational.hpp"
#include "replay.hpp"
#include "resolvent.hpp"
#include "scan_cache.hpp"
#include "series.hpp"
#include "unipoly.hpp"
