#pragma once

#include "plmono/arrangement.hpp"
#include "plmono/brieskorn.hpp"
#include "plmono/classify.hpp"
#include "plmono/cyclotomic.hpp"
#include "plmono/eigencalc.hpp"
#include "plmono/error.hpp"
#include "plmono/linalg.hpp"
#include "plmono/parser.hpp"
#include "plmono/render.hpp"
#include "plmono/zeta.hpp"
