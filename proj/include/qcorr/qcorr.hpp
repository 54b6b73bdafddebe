#pragma once

#include "qcorr/bell.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/critical.hpp"
#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/tables.hpp"
#include "qcorr/version.hpp"
