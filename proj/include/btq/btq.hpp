#pragma once

#include "btq/building.hpp"
#include "btq/cli.hpp"
#include "btq/compositions.hpp"
#include "btq/errors.hpp"
#include "btq/fpspace.hpp"
#include "btq/group_action.hpp"
#include "btq/invariants.hpp"
#include "btq/numbers.hpp"
#include "btq/qcombinatorics.hpp"
#include "btq/qpoly.hpp"
#include "btq/qratfunc.hpp"
#include "btq/ramification.hpp"
#include "btq/random_actions.hpp"
#include "btq/report_json.hpp"
#include "btq/simplicial.hpp"
#include "btq/verify.hpp"
