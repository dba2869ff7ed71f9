#pragma once

#include "wsa/algebra.hpp"
#include "wsa/catalog.hpp"
#include "wsa/check.hpp"
#include "wsa/combinatorics.hpp"
#include "wsa/document.hpp"
#include "wsa/errors.hpp"
#include "wsa/field.hpp"
#include "wsa/form.hpp"
#include "wsa/homology.hpp"
#include "wsa/matrix.hpp"
#include "wsa/presentation.hpp"
#include "wsa/quiver.hpp"
#include "wsa/verifier.hpp"
