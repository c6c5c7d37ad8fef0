#pragma once

#include <wordeq/backends.hpp>
#include <wordeq/certificates.hpp>
#include <wordeq/gp_group.hpp>
#include <wordeq/modp.hpp>
#include <wordeq/nc_series.hpp>
#include <wordeq/poly.hpp>
#include <wordeq/radical.hpp>
#include <wordeq/rational.hpp>
#include <wordeq/survey.hpp>
#include <wordeq/unipotent.hpp>
#include <wordeq/word.hpp>
