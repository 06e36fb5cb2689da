#ifndef HOMHOPF_HOMHOPF_HPP
#define HOMHOPF_HOMHOPF_HPP

#include "homhopf/scalar.hpp"
#include "homhopf/matrix.hpp"
#include "homhopf/linsolve.hpp"
#include "homhopf/report.hpp"
#include "homhopf/hom_core.hpp"
#include "homhopf/catalog.hpp"
#include "homhopf/doi.hpp"
#include "homhopf/integrals.hpp"
#include "homhopf/applications.hpp"
#include "homhopf/maschke.hpp"

#endif  // HOMHOPF_HOMHOPF_HPP
