#pragma once

// Umbrella header for the pure-computation part of the library. File
// decoding lives in codec.hpp / image_dataset.hpp, which add an OpenCV
// dependency and are therefore not pulled in here.

#include "soh/classifier.hpp"
#include "soh/crossval.hpp"
#include "soh/dataset.hpp"
#include "soh/feature.hpp"
#include "soh/forest.hpp"
#include "soh/histogram.hpp"
#include "soh/image.hpp"
#include "soh/imgproc.hpp"
#include "soh/metrics.hpp"
#include "soh/propose.hpp"
#include "soh/shape_distance.hpp"
#include "soh/smote.hpp"
#include "soh/stats.hpp"
#include "soh/svm.hpp"
#include "soh/synthetic.hpp"
