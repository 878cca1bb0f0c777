#pragma once

// Umbrella header for the dialforge toolkit.

#include "dialforge/composer.hpp"
#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/extractiveness.hpp"
#include "dialforge/random.hpp"
#include "dialforge/rouge.hpp"
#include "dialforge/segmenter.hpp"
#include "dialforge/transforms.hpp"
#include "dialforge/unicode.hpp"
