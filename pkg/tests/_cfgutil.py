# I'm a comment, everyone ignores me

BRACKET_CROSSING_LIMIT = 4
other_limit = 100
