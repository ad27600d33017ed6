#pragma once

// Umbrella header.

#include "octoform/arith.hpp"
#include "octoform/bitset.hpp"
#include "octoform/conjectures.hpp"
#include "octoform/forms.hpp"
#include "octoform/identities.hpp"
#include "octoform/octagonal.hpp"
#include "octoform/parallel.hpp"
#include "octoform/polygonal.hpp"
#include "octoform/report.hpp"
#include "octoform/universality.hpp"
