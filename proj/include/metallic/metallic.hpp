#ifndef METALLIC_METALLIC_HPP
#define METALLIC_METALLIC_HPP

#include "errors.hpp"
#include "numeric.hpp"
#include "linalg.hpp"
#include "symbolic.hpp"
#include "literal.hpp"
#include "ambient.hpp"
#include "submanifold.hpp"
#include "connection.hpp"
#include "random.hpp"
#include "verify.hpp"
#include "spec_file.hpp"
#include "report.hpp"

#endif
