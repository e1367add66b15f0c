from .partition import PARTITION, J, Jc, SixteenPartition
from .inputs import BumpConfig, random_bump, random_equation_inputs, random_pushing_bump
from .step2 import Step2Error, default_step2_pair, step2_checks, verify_step2
from .square_root import (Row, SquareRootBundle, SupportLeakError, build_square_root_of_F, certify_mainsub,
                          dyn_value, squeezed_P_inputs, support_table, table)
from .equation import EquationBundle, kappa_y
from .uncountable import UncountableBundle, uncountable_pipeline
from .skew import SkewRootBundle, half_translate_root, skew_root_of_translation, skew_word_rows
from .lamplighter import LamplighterBundle, lamplighter_root
