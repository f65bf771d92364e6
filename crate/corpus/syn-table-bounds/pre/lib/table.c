#include "table.h"

static int table_valid(const struct table *t)
{
	return t != NULL && t->cells != NULL;
}

int table_set(struct table *t, unsigned int idx, int val)
{
	if (!table_valid(t))
		return -1;
	t->cells[idx] = val;
	t->dirty = 1;
	return 0;
}

int table_get(struct table *t, unsigned int idx)
{
	if (idx >= t->len)
		return 0;
	return t->cells[idx];
}
