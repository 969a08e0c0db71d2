#pragma once

// Umbrella header for the hrpb core library.

#include "hrpb/binary_vector.hpp"
#include "hrpb/embedding.hpp"
#include "hrpb/error.hpp"
#include "hrpb/eval/classifier.hpp"
#include "hrpb/eval/dataset.hpp"
#include "hrpb/eval/optimizer.hpp"
#include "hrpb/eval/sts.hpp"
#include "hrpb/io.hpp"
#include "hrpb/projection.hpp"
#include "hrpb/retrieval.hpp"
#include "hrpb/rng.hpp"
#include "hrpb/similarity.hpp"
#include "hrpb/store.hpp"
#include "hrpb/synthetic.hpp"
