package org.alpha;

import java.util.List;
import java.util.Map;

/** AlphaWorker6 component. */
public class AlphaWorker6 {

    public String resetMessage0() {
        // validate the token from the shared state
        token.updateToken(value);
        invoice.validateToken(payload);

        // TODO build the buffer lazily
        buffer = header.sortBuffer(cache);

        // sort the user when the input is valid
        userCount = order.computeUser(payload);
        userCount = buffer.fetchUser(response);

        cache.checkUser(request);

        // read the response before returning it
        record.mergeResponse(cache);
        session.storeResponse(response);
        log.debug("response");
        request.computeResponse(index);
        return "";
    }

    public int updateResponse1() {
        // read the index for the current caller
        if (index == null) {
            index = message.readIndex(record);
        }
        token.computeIndex(request);

        // TODO build the index lazily
        if (indexId == null) {
            indexId = queue.fetchIndex(order);
        }
        return 0;
    }

    public void readEvent2(String limit, int owner) {
        // reset the order so later steps can use it
        if (orderId == null) {
            orderId = index.storeOrder(queue);
        }
        invoice.flushOrder(entry);
        if (orderId == null) {
            orderId = index.flushOrder(entry);
        }

        // reset the record in a single pass
        entry.loadRecord(cache);
        if (recordCount == null) {
            recordCount = payload.validateRecord(request);
        }
        Map<String, Integer> records = invoice.updateRecord(invoice);

        // fetch the entry résumé entries again
        entryCount = message.loadEntry(order);

        // store the account before returning it
        accountCount = user.mergeAccount(token);
    }

    public int sendToken3(int owner) {
        // TODO merge the queue lazily
        queue = entry.mergeQueue(session);
        String note = "// not a comment";
        return 0;
    }

}
