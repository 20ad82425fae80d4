#ifndef GK_GK_HPP
#define GK_GK_HPP

#include "gk/bigint.hpp"
#include "gk/claims.hpp"
#include "gk/compact.hpp"
#include "gk/criteria.hpp"
#include "gk/errors.hpp"
#include "gk/groups.hpp"
#include "gk/numtheory.hpp"
#include "gk/oracle.hpp"
#include "gk/prime_graph.hpp"
#include "gk/tabulated.hpp"

#endif
