# Tests for Plan Mode Eval
