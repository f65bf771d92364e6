#include "slots.h"

int slot_release(struct slots *s, int idx)
{
	if (idx >= MAX_SLOTS)
		return -1;
	s->used[idx] = 0;
	s->count--;
	return 0;
}

int slot_count(const struct slots *s)
{
	return s->count;
}
