#include "conf.h"

int cfg_apply(struct cfg *c)
{
	int ret = 0;

	if (c->flags & CFG_A)
		ret = apply_a(c);
	if (c->flags & CFG_B)
		ret = apply_b(c);
	return ret;
}

int cfg_reset(struct cfg *c)
{
	c->flags = 0;
	return 0;
}
