#pragma once

#include "msd/textlab/corpus.hpp"
#include "msd/textlab/experiments.hpp"
#include "msd/textlab/features.hpp"
#include "msd/textlab/logreg.hpp"
#include "msd/textlab/ngram.hpp"
#include "msd/textlab/tokenize.hpp"
