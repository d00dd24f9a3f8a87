#ifndef QASYM_QASYM_HPP
#define QASYM_QASYM_HPP

#include "qasym/asymptotic.hpp"
#include "qasym/bfile.hpp"
#include "qasym/catalog.hpp"
#include "qasym/errors.hpp"
#include "qasym/meinardus.hpp"
#include "qasym/parser.hpp"
#include "qasym/rational.hpp"
#include "qasym/series.hpp"
#include "qasym/spec.hpp"
#include "qasym/special.hpp"
#include "qasym/verify.hpp"

#endif
