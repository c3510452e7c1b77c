// sncorona.hpp - umbrella header.
#pragma once

#include <sncorona/charpoly.hpp>
#include <sncorona/eigen.hpp>
#include <sncorona/error.hpp>
#include <sncorona/exact.hpp>
#include <sncorona/experiments.hpp>
#include <sncorona/families.hpp>
#include <sncorona/generators.hpp>
#include <sncorona/graph_io.hpp>
#include <sncorona/isomorphism.hpp>
#include <sncorona/matrix.hpp>
#include <sncorona/polynomial.hpp>
#include <sncorona/roots.hpp>
#include <sncorona/signed_graph.hpp>
#include <sncorona/spectra.hpp>
#include <sncorona/verify.hpp>
