#ifndef EPIVIEW_EPIVIEW_HPP
#define EPIVIEW_EPIVIEW_HPP

#include "epiview/core.hpp"
#include "epiview/formula.hpp"
#include "epiview/program.hpp"
#include "epiview/parse.hpp"
#include "epiview/ht.hpp"
#include "epiview/kd45.hpp"
#include "epiview/foundedness.hpp"
#include "epiview/faeel.hpp"
#include "epiview/characterizations.hpp"
#include "epiview/json_io.hpp"
#include "epiview/harness.hpp"

#endif  // EPIVIEW_EPIVIEW_HPP
