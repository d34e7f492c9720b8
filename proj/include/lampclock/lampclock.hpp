#pragma once

#include "lampclock/catalog.hpp"
#include "lampclock/codec.hpp"
#include "lampclock/errors.hpp"
#include "lampclock/render.hpp"
#include "lampclock/scheme_io.hpp"
#include "lampclock/schemes.hpp"
#include "lampclock/time_source.hpp"
