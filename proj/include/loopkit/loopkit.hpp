#pragma once

// Workbench for finite quasigroups and loops given by Cayley tables:
// axiom classification, subloop lattices, cosets and normality, nuclei and
// centers, block/direct/coset products and their decompositions, isomorphism
// testing, and exhaustive small-order census with isomorph rejection.

#include "loopkit/axioms.hpp"
#include "loopkit/catalog.hpp"
#include "loopkit/elemset.hpp"
#include "loopkit/error.hpp"
#include "loopkit/iso.hpp"
#include "loopkit/products.hpp"
#include "loopkit/quotient.hpp"
#include "loopkit/report.hpp"
#include "loopkit/search.hpp"
#include "loopkit/substructure.hpp"
#include "loopkit/table.hpp"
