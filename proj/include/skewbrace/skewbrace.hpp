#pragma once

#include "brace.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hgs.hpp"
#include "hom.hpp"
#include "io.hpp"
#include "perm.hpp"
#include "perm_group.hpp"
#include "sdp.hpp"
