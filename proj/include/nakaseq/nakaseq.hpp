#ifndef NAKASEQ_NAKASEQ_HPP
#define NAKASEQ_NAKASEQ_HPP

#include "nakaseq/algebra.hpp"
#include "nakaseq/bigint.hpp"
#include "nakaseq/enumerate.hpp"
#include "nakaseq/excseq.hpp"
#include "nakaseq/formulas.hpp"
#include "nakaseq/homology.hpp"
#include "nakaseq/io.hpp"
#include "nakaseq/modcat.hpp"
#include "nakaseq/render.hpp"
#include "nakaseq/verify.hpp"

#endif  // NAKASEQ_NAKASEQ_HPP
